#include "nervecheck/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "nervecheck/hyperbolicity.hpp"
#include "nervecheck/nerve.hpp"

namespace nervecheck {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw Error(Errc::TooLarge, "integer overflow in exact linear algebra");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw Error(Errc::TooLarge, "integer overflow in exact linear algebra");
  return r;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const std::int64_t xv = x.at(i, k);
      if (!xv) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = checked_add(z.at(i, j), checked_mul(xv, y.at(k, j)));
    }
  return z;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

SmithResult smith_normal_form(const IntMatrix& input) {
  SmithResult res;
  res.d = input;
  res.u = IntMatrix::identity(input.rows);
  res.v = IntMatrix::identity(input.cols);
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](int dst, int src, std::int64_t factor) {  // row_dst += f*row_src
    if (!factor) return;
    for (int c = 0; c < d.cols; ++c)
      d.at(dst, c) = checked_add(d.at(dst, c), checked_mul(factor, d.at(src, c)));
    for (int c = 0; c < u.cols; ++c)
      u.at(dst, c) = checked_add(u.at(dst, c), checked_mul(factor, u.at(src, c)));
  };
  auto add_col = [&](int dst, int src, std::int64_t factor) {
    if (!factor) return;
    for (int r = 0; r < d.rows; ++r)
      d.at(r, dst) = checked_add(d.at(r, dst), checked_mul(factor, d.at(r, src)));
    for (int r = 0; r < v.rows; ++r)
      v.at(r, dst) = checked_add(v.at(r, dst), checked_mul(factor, v.at(r, src)));
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  };

  const int steps = std::min(d.rows, d.cols);
  for (int t = 0; t < steps; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    int pi = -1, pj = -1;
    std::int64_t best = 0;
    for (int i = t; i < d.rows; ++i)
      for (int j = t; j < d.cols; ++j) {
        const std::int64_t x = std::abs(d.at(i, j));
        if (x && (pi < 0 || x < best)) {
          best = x;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (!d.at(i, t)) continue;
        add_row(i, t, -(d.at(i, t) / d.at(t, t)));
        if (d.at(i, t)) {  // remainder became the smaller pivot
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (!d.at(t, j)) continue;
        add_col(j, t, -(d.at(t, j) / d.at(t, t)));
        if (d.at(t, j)) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: fold any entry the pivot misses into its row.
      for (int i = t + 1; i < d.rows && !dirty; ++i)
        for (int j = t + 1; j < d.cols && !dirty; ++j)
          if (d.at(i, j) % d.at(t, t)) {
            add_row(t, i, 1);
            dirty = true;
          }
    }
    if (d.at(t, t) < 0) negate_row(t);
  }

  for (int t = 0; t < steps; ++t)
    if (d.at(t, t)) {
      res.divisors.push_back(d.at(t, t));
      ++res.rank;
    }
  return res;
}

IntMatrix coboundary_matrix(const LabelledComplex& k, int n) {
  const auto& by_dim = k.masks_by_dim();
  auto level = [&](int q) -> std::vector<Subset> {
    if (q < 0 || q >= static_cast<int>(by_dim.size())) return {};
    return by_dim[q];
  };

  if (n == -1) {
    // Augmentation: every vertex evaluates the empty simplex once.
    IntMatrix m(static_cast<int>(level(0).size()), 1);
    for (int i = 0; i < m.rows; ++i) m.at(i, 0) = 1;
    return m;
  }
  if (n < -1) return IntMatrix(0, 0);

  const std::vector<Subset> cols = level(n);
  const std::vector<Subset> rows = level(n + 1);
  std::map<Subset, int> col_index;
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    col_index[cols[j]] = j;

  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows; ++i) {
    const Subset tau = rows[i];
    int position = 0;
    for (Subset rest = tau; rest; ++position) {
      const Subset bit = rest & (~rest + 1);
      rest &= rest - 1;
      m.at(i, col_index.at(tau & ~bit)) = (position % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

CohomologyProfile reduced_cohomology(const LabelledComplex& k) {
  CohomologyProfile profile;
  const int d = k.dim();

  // rank and torsion of each coboundary, degrees -1 .. d.
  std::map<int, SmithResult> smith;
  for (int n = -1; n <= d; ++n) smith[n] = smith_normal_form(coboundary_matrix(k, n));

  auto rank_of = [&](int n) -> int {
    auto it = smith.find(n);
    return it == smith.end() ? 0 : it->second.rank;
  };
  auto cochain_dim = [&](int n) -> std::int64_t {
    if (n == -1) return 1;
    const auto& by_dim = k.masks_by_dim();
    if (n < 0 || n >= static_cast<int>(by_dim.size())) return 0;
    return static_cast<std::int64_t>(by_dim[n].size());
  };

  for (int n = -1; n <= d; ++n) {
    CohomologyProfile::Group g;
    g.free_rank = cochain_dim(n) - rank_of(n) - rank_of(n - 1);
    if (auto it = smith.find(n - 1); it != smith.end())
      for (std::int64_t div : it->second.divisors)
        if (div > 1) g.torsion.push_back(div);
    std::sort(g.torsion.begin(), g.torsion.end());
    profile.by_degree[n] = std::move(g);
  }
  return profile;
}

std::optional<int> CohomologyProfile::top_nonzero_degree() const {
  std::optional<int> top;
  for (const auto& [degree, group] : by_degree)
    if (!group.trivial()) top = degree;
  return top;
}

LabelledComplex punctured_complex(const LabelledComplex& k,
                                  const std::vector<std::string>& simplex) {
  Subset mask = 0;
  for (const auto& v : simplex) mask |= Subset{1} << k.vertex_index(v);
  if (!k.contains_mask(mask))
    throw Error(Errc::NotASimplex, "puncture must be a simplex of the complex");
  return full_subcomplex_mask(k, k.full_mask() & ~mask);
}

PcdResult pcd(const LabelledComplex& k) {
  if (k.empty()) throw Error(Errc::EmptyComplex, "pcd of the empty complex");

  PcdResult best;
  bool found = false;
  auto consider = [&](const CohomologyProfile& profile,
                      const std::optional<std::vector<std::string>>& source) {
    if (auto top = profile.top_nonzero_degree()) {
      if (!found || *top > best.value) {
        best.value = *top;
        best.puncture = source;
        found = true;
      }
    }
  };

  consider(reduced_cohomology(k), std::nullopt);
  for (Subset sigma : k.simplex_masks()) {
    const auto names = k.names_of(sigma);
    consider(reduced_cohomology(full_subcomplex_mask(k, k.full_mask() & ~sigma)),
             names);
  }
  if (!found) {
    best.value = -1;
    best.degenerate = true;
  }
  return best;
}

int boundary_dimension(const CoxeterMatrix& m, int max_rank) {
  const HyperbolicityVerdict verdict = is_word_hyperbolic(m, max_rank);
  if (!verdict.hyperbolic)
    throw Error(Errc::NotHyperbolic,
                "boundary dimension is defined for word hyperbolic groups");
  if (!is_infinite(m))
    throw Error(Errc::FiniteGroup, "finite groups have empty boundary");
  return pcd(nerve(m, max_rank)).value;
}

}  // namespace nervecheck
