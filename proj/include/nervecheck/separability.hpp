// Unseparability of labelled nerves: connectivity, separating simplices,
// separating nonadjacent pairs, separating labelled suspensions, each with
// an explicit witness recording the component split.
#pragma once

#include <optional>

#include "nervecheck/nerve.hpp"

namespace nervecheck {

struct SeparationWitness {
  enum class Kind {
    Disconnected,
    SeparatingSimplex,
    SeparatingPair,
    SeparatingSuspension,
  };

  Kind kind = Kind::Disconnected;
  std::vector<std::string> removed;                 // sorted vertex names
  std::vector<std::vector<std::string>> components; // >= 2 blocks
};

const char* to_string(SeparationWitness::Kind kind);

// Does removing R (passing to the full subcomplex on the complement)
// disconnect k? The empty remainder never counts as a separation.
std::optional<SeparationWitness> separates(const LabelledComplex& k,
                                           const std::set<std::string>& r);

std::vector<SeparationWitness> separating_simplices(const LabelledComplex& k);
std::vector<SeparationWitness> separating_pairs(const LabelledComplex& k);

// Suspensions with a nonempty simplex factor; the bare doubletons are
// exactly the separating pairs and are reported there.
std::vector<SeparationWitness> separating_suspensions(
    const LabelledComplex& k);

struct UnseparabilityResult {
  bool unseparable = false;
  std::optional<SeparationWitness> witness;
};

// Connected, no separating simplex, no separating nonadjacent pair, no
// separating labelled suspension; the first failure (in that order) is
// returned as the witness.
UnseparabilityResult is_unseparable(const LabelledComplex& k);

}  // namespace nervecheck
