// Word hyperbolicity of Coxeter groups: no affine special subgroup of rank
// >= 3 and no special subgroup splitting as a product of two infinite
// special subgroups, with explicit witnesses when either condition fails.
#pragma once

#include <optional>
#include <variant>

#include "nervecheck/spherical.hpp"

namespace nervecheck {

struct AffineWitness {
  GeneratorSet subset;      // connected in the diagram, size >= 3
  IrreducibleTypeTag tag;   // the affine type
};

struct ProductWitness {
  GeneratorSet left, right;  // disjoint, all cross labels 2, both infinite
};

struct HyperbolicityVerdict {
  bool hyperbolic = false;
  std::optional<std::variant<AffineWitness, ProductWitness>> witness;
};

// The group is infinite iff its nerve is not a simplex, i.e. iff the full
// generator set is not spherical.
bool is_infinite(const CoxeterMatrix& m);

// All connected subsets of size >= 3 whose diagram is an affine type.
std::vector<AffineWitness> affine_witnesses(const CoxeterMatrix& m,
                                            int max_rank = kDefaultMaxRank);

// Minimal witnesses to a direct product of two infinite special
// subgroups: pairs of inclusion-minimal non-spherical subsets that are
// disjoint with every cross label equal to 2, reported once per unordered
// pair, smaller witnesses first.
std::vector<ProductWitness> product_witnesses(const CoxeterMatrix& m,
                                              int max_rank = kDefaultMaxRank);

// Short-circuits at the first witness (affine scanned first).
HyperbolicityVerdict is_word_hyperbolic(const CoxeterMatrix& m,
                                        int max_rank = kDefaultMaxRank);

}  // namespace nervecheck
