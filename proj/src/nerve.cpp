#include "nervecheck/nerve.hpp"

#include <bit>

namespace nervecheck {

LabelledComplex nerve(const SphericalOracle& oracle, int max_rank) {
  const CoxeterMatrix& m = oracle.matrix();
  const int n = m.rank();
  if (n > max_rank)
    throw Error(Errc::RankGuardExceeded,
                "rank " + std::to_string(n) + " exceeds the guard of " +
                    std::to_string(max_rank) +
                    " (raise it explicitly for larger systems)");

  std::set<Subset> simplices;
  std::map<Subset, int> labels;

  std::vector<Subset> level;
  for (int i = 0; i < n; ++i) {
    simplices.insert(Subset{1} << i);
    level.push_back(Subset{1} << i);
  }
  // Edges: a dihedral subgroup is finite iff its label is finite.
  {
    std::vector<Subset> next;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Label l = m.label(i, j);
        if (l.is_inf()) continue;
        const Subset e = (Subset{1} << i) | (Subset{1} << j);
        simplices.insert(e);
        labels[e] = l.value();
        next.push_back(e);
      }
    level = std::move(next);
  }
  // Higher levels: extend each simplex by a vertex above its top bit and
  // keep it only when all facets are already simplices and the subgroup
  // is finite (the facet test is sound because sphericality is monotone).
  while (!level.empty()) {
    std::vector<Subset> next;
    for (Subset s : level) {
      const int top = 63 - std::countl_zero(s);
      for (int v = top + 1; v < n; ++v) {
        const Subset candidate = s | (Subset{1} << v);
        bool facets_ok = true;
        for (Subset rest = candidate; rest && facets_ok;) {
          const Subset bit = rest & (~rest + 1);
          rest &= rest - 1;
          facets_ok = simplices.count(candidate & ~bit) != 0;
        }
        if (facets_ok && oracle.is_spherical(candidate)) {
          simplices.insert(candidate);
          next.push_back(candidate);
        }
      }
    }
    level = std::move(next);
  }

  return LabelledComplex::from_masks(m.generators(), std::move(simplices),
                                     std::move(labels));
}

LabelledComplex nerve(const CoxeterMatrix& m, int max_rank) {
  return nerve(SphericalOracle(m), max_rank);
}

bool is_doubleton(const LabelledComplex& k) {
  const auto counts = k.simplex_counts_per_dim();
  return counts.size() == 1 && counts[0] == 2;
}

std::vector<LabelledSuspension> find_labelled_suspensions(
    const LabelledComplex& k) {
  std::vector<LabelledSuspension> out;
  const int n = k.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Subset pair = (Subset{1} << u) | (Subset{1} << v);
      if (k.contains_mask(pair)) continue;  // adjacent
      // sigma = empty: the bare doubleton always qualifies.
      out.push_back({{}, k.vertex_names()[u], k.vertex_names()[v]});
      for (Subset sigma : k.simplex_masks()) {
        if (sigma & pair) continue;
        if (!k.contains_mask(sigma | (Subset{1} << u))) continue;
        if (!k.contains_mask(sigma | (Subset{1} << v))) continue;
        bool connecting_ok = true;
        for (Subset rest = sigma; rest && connecting_ok;) {
          const int x = std::countr_zero(rest);
          rest &= rest - 1;
          connecting_ok =
              k.edge_label_mask((Subset{1} << u) | (Subset{1} << x)) == 2 &&
              k.edge_label_mask((Subset{1} << v) | (Subset{1} << x)) == 2;
        }
        if (!connecting_ok) continue;
        // By face-closedness and nonadjacency of u,v the full subcomplex
        // on sigma+{u,v} now coincides with the labelled join; keep the
        // literal comparison as a guard.
        const LabelledComplex sub = full_subcomplex_mask(k, sigma | pair);
        LabelledComplex simplex_part = full_subcomplex_mask(k, sigma);
        LabelledComplex doubleton = LabelledComplex::make(
            {k.vertex_names()[u], k.vertex_names()[v]},
            {{k.vertex_names()[u]}, {k.vertex_names()[v]}}, {});
        if (labelled_join(simplex_part, doubleton) == sub)
          out.push_back(
              {k.names_of(sigma), k.vertex_names()[u], k.vertex_names()[v]});
      }
    }
  }
  return out;
}

}  // namespace nervecheck
