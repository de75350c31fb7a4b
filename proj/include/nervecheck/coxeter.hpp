// Coxeter matrices: the data model, validation, restriction, and the two
// diagram decompositions (commuting-product factors and diagram components).
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nervecheck/errors.hpp"

namespace nervecheck {

// An edge label: a finite integer >= 1 or the distinguished value "inf".
// The infinite value is its own state, not a numeric sentinel.
class Label {
 public:
  Label() : value_(2), infinite_(false) {}

  static Label finite(int m) {
    Label l;
    l.value_ = m;
    l.infinite_ = false;
    return l;
  }
  static Label inf() {
    Label l;
    l.infinite_ = true;
    return l;
  }

  bool is_inf() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  // Finite value; calling this on "inf" is a programming error.
  int value() const {
    if (infinite_) throw Error(Errc::InvariantBreach, "value() on inf label");
    return value_;
  }

  std::string str() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

  friend bool operator==(const Label& a, const Label& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }

 private:
  int value_;
  bool infinite_;
};

// Generator subsets are sets of names; all matrix-level set operations use
// name identity so they stay stable across restriction.
using GeneratorSet = std::set<std::string>;

// Internal subset representation for enumeration loops. Index i of the
// ambient matrix maps to bit i. Caps the representable rank at 64.
using Subset = std::uint64_t;

inline constexpr int kDefaultMaxRank = 20;
inline constexpr int kHardRankLimit = 64;

// A symmetric rank-n table of labels with named generators.
class CoxeterMatrix {
 public:
  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }

  // Index of a generator name; throws UnknownGenerator.
  int index(const std::string& name) const;
  bool has_generator(const std::string& name) const {
    return index_.count(name) != 0;
  }

  Label label(int i, int j) const { return entries_[i * rank() + j]; }
  Label label(const std::string& s, const std::string& t) const {
    return label(index(s), index(t));
  }

  GeneratorSet generator_set() const {
    return GeneratorSet(names_.begin(), names_.end());
  }

  Subset mask_of(const GeneratorSet& subset) const;
  GeneratorSet set_of(Subset mask) const;

  friend bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b);

  friend CoxeterMatrix validate_matrix(
      const std::vector<std::vector<Label>>& raw,
      const std::optional<std::vector<std::string>>& names);

 private:
  std::vector<std::string> names_;
  std::vector<Label> entries_;  // row-major, rank x rank
  std::unordered_map<std::string, int> index_;

  void rebuild_index();
};

// Checks all type invariants and returns the matrix. Default names are
// g1..gn when none are given.
CoxeterMatrix validate_matrix(
    const std::vector<std::vector<Label>>& raw,
    const std::optional<std::vector<std::string>>& names = std::nullopt);

// Restriction to a nonempty subset of the generators (the matrix of the
// special subgroup generated by that subset).
CoxeterMatrix restrict_to(const CoxeterMatrix& m, const GeneratorSet& subset);

// Partition of the generators into commuting-product factors: connected
// components of the graph with an edge where the label differs from 2.
struct FactorDecomposition {
  std::vector<GeneratorSet> factors;
  bool indecomposable() const { return factors.size() == 1; }
};

FactorDecomposition product_factors(const CoxeterMatrix& m);

// Connected components of the Coxeter diagram (edge iff label >= 3 or inf)
// restricted to a nonempty subset.
std::vector<GeneratorSet> diagram_components(const CoxeterMatrix& m,
                                             const GeneratorSet& subset);

// Mask-level variant used by enumeration-heavy callers.
std::vector<Subset> diagram_component_masks(const CoxeterMatrix& m,
                                            Subset subset);

// Allowed off-diagonal labels with sampling weights.
struct LabelDistribution {
  std::vector<Label> labels;
  std::vector<double> weights;  // empty = uniform
};

// Deterministic random matrix for a fixed (n, labels, seed).
CoxeterMatrix random_matrix(int n, const LabelDistribution& dist,
                            std::uint64_t seed);

}  // namespace nervecheck
