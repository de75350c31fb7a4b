// Reduced simplicial cohomology over the integers via Smith normal form,
// punctured complexes, and the puncture-respecting cohomological dimension
// that measures the topological dimension of the Gromov boundary.
#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "nervecheck/simplicial.hpp"

namespace nervecheck {

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  static IntMatrix identity(int n);
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
bool operator==(const IntMatrix& x, const IntMatrix& y);

struct SmithResult {
  IntMatrix d;  // u * a * v, diagonal, nonnegative, d1 | d2 | ...
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform
  int rank = 0;
  std::vector<std::int64_t> divisors;  // the nonzero diagonal entries
};

// Exact integer Smith normal form. Pivots are chosen smallest-first to
// keep intermediate entries small; arithmetic is overflow-checked and
// throws TooLarge instead of wrapping.
SmithResult smith_normal_form(const IntMatrix& a);

// Reduced integer cohomology per degree, including degree -1 (the empty
// complex has free rank 1 there, every nonempty complex has 0).
struct CohomologyProfile {
  struct Group {
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion;  // elementary divisors > 1, sorted
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
  };

  std::map<int, Group> by_degree;  // degrees -1..dim with data

  Group at(int n) const {
    auto it = by_degree.find(n);
    return it == by_degree.end() ? Group{} : it->second;
  }
  // Largest degree with a nonzero group; nullopt when everything vanishes.
  std::optional<int> top_nonzero_degree() const;
};

CohomologyProfile reduced_cohomology(const LabelledComplex& k);

// The augmented coboundary matrix from degree n to n+1; exposed for the
// rational-rank cross-checks in the test suite.
IntMatrix coboundary_matrix(const LabelledComplex& k, int n);

// Full subcomplex on the complement of a closed simplex of k.
LabelledComplex punctured_complex(const LabelledComplex& k,
                                  const std::vector<std::string>& simplex);

struct PcdResult {
  int value = -1;
  // Puncture attaining the max; nullopt means the unpunctured complex.
  std::optional<std::vector<std::string>> puncture;
  // Set when no group was nonzero anywhere (only possible when no
  // puncture empties the complex); the value is then reported as -1.
  bool degenerate = false;
};

// max{ n : reduced cohomology of k, or of some puncture of k, is nonzero
// in degree n }. The complex must be nonempty.
PcdResult pcd(const LabelledComplex& k);

// pcd of the nerve = topological dimension of the Gromov boundary, for
// infinite word hyperbolic systems. Throws NotHyperbolic / FiniteGroup.
int boundary_dimension(const CoxeterMatrix& m, int max_rank = kDefaultMaxRank);

}  // namespace nervecheck
