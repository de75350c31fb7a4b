// The labelled nerve of a Coxeter system, plus the two nerve shapes the
// two-ended characterization needs: doubletons and labelled suspensions.
#pragma once

#include "nervecheck/simplicial.hpp"
#include "nervecheck/spherical.hpp"

namespace nervecheck {

// Vertex set = generators; a subset is a simplex iff its special subgroup
// is finite. Edges carry the matrix labels. Spherical subsets are
// enumerated level by level, so a set is only tested once all its facets
// are known simplices.
LabelledComplex nerve(const CoxeterMatrix& m, int max_rank = kDefaultMaxRank);
LabelledComplex nerve(const SphericalOracle& oracle,
                      int max_rank = kDefaultMaxRank);

// Exactly two vertices and no edge.
bool is_doubleton(const LabelledComplex& k);

struct LabelledSuspension {
  std::vector<std::string> simplex;  // may be empty (the bare doubleton)
  std::string u, v;                  // the nonadjacent pair
};

// All full subcomplexes of k that are labelled joins of a simplex and a
// doubleton: nonadjacent u, v together with a (possibly empty) simplex
// joined to both through label-2 edges.
std::vector<LabelledSuspension> find_labelled_suspensions(
    const LabelledComplex& k);

}  // namespace nervecheck
