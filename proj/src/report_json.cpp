#include "nervecheck/report_json.hpp"

namespace nervecheck {

using nlohmann::json;

json to_json(const PlanarityCertificate& cert) {
  json j;
  j["verdict"] = cert.verdict;
  j["obstruction"] = to_string(cert.obstruction);
  if (cert.verdict) {
    json rotation = json::object();
    for (const auto& [v, order] : cert.rotation) rotation[v] = order;
    j["rotation"] = std::move(rotation);
    j["faces"] = cert.faces;
    json faces_of = json::object();
    for (const auto& [triangle, face] : cert.triangle_faces) {
      std::string key;
      for (const auto& v : triangle) key += (key.empty() ? "" : ",") + v;
      faces_of[key] = face;
    }
    j["triangle_faces"] = std::move(faces_of);
  }
  return j;
}

json to_json(const SeparationWitness& witness) {
  json j;
  j["kind"] = to_string(witness.kind);
  j["removed"] = witness.removed;
  j["components"] = witness.components;
  return j;
}

json to_json(const HyperbolicityVerdict& verdict) {
  json j;
  j["hyperbolic"] = verdict.hyperbolic;
  if (!verdict.witness) {
    j["witness"] = nullptr;
  } else if (const auto* affine = std::get_if<AffineWitness>(&*verdict.witness)) {
    j["witness"] = {{"kind", "affine"},
                    {"subset", affine->subset},
                    {"type", affine->tag.str()}};
  } else {
    const auto& product = std::get<ProductWitness>(*verdict.witness);
    j["witness"] = {{"kind", "product"},
                    {"left", product.left},
                    {"right", product.right}};
  }
  return j;
}

json to_json(const ClassificationReport& report) {
  json j;
  j["class"] = to_string(report.boundary_class);
  j["boundary_dimension"] =
      report.boundary_dim ? json(*report.boundary_dim) : json(nullptr);

  {
    json input;
    input["names"] = report.generator_names;
    json matrix = json::array();
    for (const auto& row : report.matrix) {
      json r = json::array();
      for (const Label& l : row) r.push_back(l.str());
      matrix.push_back(std::move(r));
    }
    input["matrix"] = std::move(matrix);
    j["input"] = std::move(input);
  }

  j["hyperbolicity"] = to_json(report.hyperbolicity);

  json factors = json::array();
  for (const auto& f : report.factors)
    factors.push_back({{"members", f.members}, {"spherical", f.spherical}});
  j["factors"] = std::move(factors);
  j["core"] = report.core_generators;
  j["nerve_simplex_counts"] = report.nerve_simplex_counts;

  if (report.unseparability) {
    json u;
    u["verdict"] = report.unseparability->unseparable;
    u["witness"] = report.unseparability->witness
                       ? to_json(*report.unseparability->witness)
                       : json(nullptr);
    j["unseparable"] = std::move(u);
  } else {
    j["unseparable"] = nullptr;
  }

  j["planarity"] =
      report.planarity ? to_json(*report.planarity) : json(nullptr);

  if (report.pcd_result) {
    json p;
    p["value"] = report.pcd_result->value;
    p["puncture"] = report.pcd_result->puncture
                        ? json(*report.pcd_result->puncture)
                        : json(nullptr);
    p["degenerate"] = report.pcd_result->degenerate;
    j["pcd"] = std::move(p);
  } else {
    j["pcd"] = nullptr;
  }

  j["notes"] = report.notes;
  return j;
}

}  // namespace nervecheck
