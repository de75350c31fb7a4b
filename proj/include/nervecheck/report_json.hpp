// JSON serialization of classification reports. Output is schema-stable
// and byte-deterministic: keys are sorted and nothing time-dependent goes
// into the payload.
#pragma once

#include <json.hpp>

#include "nervecheck/classifier.hpp"

namespace nervecheck {

nlohmann::json to_json(const PlanarityCertificate& cert);
nlohmann::json to_json(const SeparationWitness& witness);
nlohmann::json to_json(const HyperbolicityVerdict& verdict);
nlohmann::json to_json(const ClassificationReport& report);

}  // namespace nervecheck
