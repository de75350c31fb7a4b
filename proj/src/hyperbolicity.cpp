#include "nervecheck/hyperbolicity.hpp"

#include <algorithm>
#include <bit>

namespace nervecheck {

namespace {

void check_rank_guard(const CoxeterMatrix& m, int max_rank) {
  if (m.rank() > max_rank)
    throw Error(Errc::RankGuardExceeded,
                "rank " + std::to_string(m.rank()) + " exceeds the guard of " +
                    std::to_string(max_rank));
}

std::vector<Subset> diagram_neighbor_masks(const CoxeterMatrix& m) {
  std::vector<Subset> nbr(m.rank(), 0);
  for (int i = 0; i < m.rank(); ++i)
    for (int j = 0; j < m.rank(); ++j)
      if (i != j && m.label(i, j) != Label::finite(2))
        nbr[i] |= Subset{1} << j;
  return nbr;
}

// Visits every connected subset of the diagram graph exactly once, growing
// by frontier extension; subsets larger than `cap` are not visited. The
// callback returns false to stop the whole enumeration.
template <typename Callback>
bool enumerate_connected(const std::vector<Subset>& nbr, int cap,
                         Callback&& visit) {
  const int n = static_cast<int>(nbr.size());
  auto rec = [&](auto&& self, Subset s, Subset forbidden) -> bool {
    if (!visit(s)) return false;
    if (std::popcount(s) >= cap) return true;
    Subset frontier = 0;
    for (Subset rest = s; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      frontier |= nbr[v];
    }
    frontier &= ~s & ~forbidden;
    Subset local_forbidden = forbidden;
    while (frontier) {
      const Subset bit = frontier & (~frontier + 1);
      frontier &= frontier - 1;
      if (!self(self, s | bit, local_forbidden)) return false;
      local_forbidden |= bit;
    }
    return true;
  };
  for (int r = 0; r < n; ++r) {
    const Subset below = (Subset{1} << r) - 1;
    if (!rec(rec, Subset{1} << r, below)) return false;
  }
  return true;
}

// Inclusion-minimal non-spherical subsets, found level by level: a set all
// of whose facets are spherical but which is not spherical itself.
std::vector<Subset> minimal_nonspherical_sets(const SphericalOracle& oracle) {
  const CoxeterMatrix& m = oracle.matrix();
  const int n = m.rank();
  std::vector<Subset> minimal;
  std::set<Subset> spherical;
  std::vector<Subset> level;
  for (int i = 0; i < n; ++i) {
    spherical.insert(Subset{1} << i);
    level.push_back(Subset{1} << i);
  }
  {
    std::vector<Subset> next;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Subset pair = (Subset{1} << i) | (Subset{1} << j);
        if (m.label(i, j).is_inf()) {
          minimal.push_back(pair);
        } else {
          spherical.insert(pair);
          next.push_back(pair);
        }
      }
    level = std::move(next);
  }
  while (!level.empty()) {
    std::vector<Subset> next;
    for (Subset s : level) {
      const int top = 63 - std::countl_zero(s);
      for (int v = top + 1; v < n; ++v) {
        const Subset candidate = s | (Subset{1} << v);
        bool facets_spherical = true;
        for (Subset rest = candidate; rest && facets_spherical;) {
          const Subset bit = rest & (~rest + 1);
          rest &= rest - 1;
          facets_spherical = spherical.count(candidate & ~bit) != 0;
        }
        if (!facets_spherical) continue;
        if (oracle.is_spherical(candidate)) {
          spherical.insert(candidate);
          next.push_back(candidate);
        } else {
          minimal.push_back(candidate);
        }
      }
    }
    level = std::move(next);
  }
  return minimal;
}

bool all_cross_labels_two(const CoxeterMatrix& m, Subset a, Subset b) {
  for (Subset ra = a; ra;) {
    const int v = std::countr_zero(ra);
    ra &= ra - 1;
    for (Subset rb = b; rb;) {
      const int w = std::countr_zero(rb);
      rb &= rb - 1;
      if (m.label(v, w) != Label::finite(2)) return false;
    }
  }
  return true;
}

// Affine diagrams have at most 9 vertices (~E8), so the scan is capped.
constexpr int kMaxAffineSize = 9;

}  // namespace

bool is_infinite(const CoxeterMatrix& m) {
  const Subset all = m.rank() == 64 ? ~Subset{0} : (Subset{1} << m.rank()) - 1;
  return !is_spherical_mask(m, all);
}

std::vector<AffineWitness> affine_witnesses(const CoxeterMatrix& m,
                                            int max_rank) {
  check_rank_guard(m, max_rank);
  const auto nbr = diagram_neighbor_masks(m);
  std::vector<std::pair<Subset, IrreducibleTypeTag>> found;
  enumerate_connected(nbr, kMaxAffineSize, [&](Subset s) {
    if (std::popcount(s) >= 3) {
      const IrreducibleTypeTag tag = classify_irreducible_mask(m, s);
      if (tag.is_affine_type()) found.emplace_back(s, tag);
    }
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const int pa = std::popcount(a.first), pb = std::popcount(b.first);
    return pa != pb ? pa < pb : a.first < b.first;
  });
  std::vector<AffineWitness> out;
  for (const auto& [mask, tag] : found)
    out.push_back({m.set_of(mask), tag});
  return out;
}

std::vector<ProductWitness> product_witnesses(const CoxeterMatrix& m,
                                              int max_rank) {
  check_rank_guard(m, max_rank);
  SphericalOracle oracle(m);
  std::vector<Subset> minimal = minimal_nonspherical_sets(oracle);
  std::sort(minimal.begin(), minimal.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::vector<ProductWitness> out;
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (minimal[i] & minimal[j]) continue;
      if (!all_cross_labels_two(m, minimal[i], minimal[j])) continue;
      out.push_back({m.set_of(minimal[i]), m.set_of(minimal[j])});
    }
  return out;
}

HyperbolicityVerdict is_word_hyperbolic(const CoxeterMatrix& m, int max_rank) {
  check_rank_guard(m, max_rank);

  // Affine scan first, stopping at the first witness.
  const auto nbr = diagram_neighbor_masks(m);
  std::optional<AffineWitness> affine;
  enumerate_connected(nbr, kMaxAffineSize, [&](Subset s) {
    if (std::popcount(s) >= 3) {
      const IrreducibleTypeTag tag = classify_irreducible_mask(m, s);
      if (tag.is_affine_type()) {
        affine = AffineWitness{m.set_of(s), tag};
        return false;
      }
    }
    return true;
  });
  if (affine) return {false, std::move(*affine)};

  SphericalOracle oracle(m);
  std::vector<Subset> minimal = minimal_nonspherical_sets(oracle);
  std::sort(minimal.begin(), minimal.end(), [](Subset a, Subset b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = i + 1; j < minimal.size(); ++j) {
      if (minimal[i] & minimal[j]) continue;
      if (!all_cross_labels_two(m, minimal[i], minimal[j])) continue;
      return {false,
              ProductWitness{m.set_of(minimal[i]), m.set_of(minimal[j])}};
    }
  return {true, std::nullopt};
}

}  // namespace nervecheck
