// The mirror double of a Coxeter system: one new involution per chosen
// generator subset, commuting with exactly that subset. Its nerve is the
// original nerve with a cone glued over each chosen full subcomplex.
#pragma once

#include "nervecheck/nerve.hpp"

namespace nervecheck {

// New generator s_i commutes with the members of subsets[i] and is
// inf-labelled against everything else, including the other new
// generators. Duplicate subsets are allowed; each one gets its own apex.
CoxeterMatrix mirror_double(const CoxeterMatrix& m,
                            const std::vector<GeneratorSet>& subsets,
                            const std::vector<std::string>& new_names);

// Computes the nerve of the mirror double and compares it against the
// nerve of m with cone(full_subcomplex(nerve, subsets[i]), new_names[i])
// glued in for each i. A false return means the construction is broken.
bool verify_mirror_nerve(const CoxeterMatrix& m,
                         const std::vector<GeneratorSet>& subsets,
                         const std::vector<std::string>& new_names,
                         int max_rank = kDefaultMaxRank);

}  // namespace nervecheck
