#include "nervecheck/doubling.hpp"

#include <bit>

namespace nervecheck {

CoxeterMatrix mirror_double(const CoxeterMatrix& m,
                            const std::vector<GeneratorSet>& subsets,
                            const std::vector<std::string>& new_names) {
  if (subsets.empty() || subsets.size() != new_names.size())
    throw Error(Errc::NonSquare,
                "need one new generator name per mirrored subset");
  {
    std::set<std::string> seen;
    for (const auto& name : new_names) {
      if (m.has_generator(name) || !seen.insert(name).second)
        throw Error(Errc::NameClash, "new generator '" + name + "'");
    }
  }
  for (const auto& subset : subsets)
    for (const auto& name : subset)
      if (!m.has_generator(name))
        throw Error(Errc::UnknownGenerator, "'" + name + "'");

  const int n = m.rank();
  const int extra = static_cast<int>(subsets.size());
  std::vector<std::string> names = m.generators();
  names.insert(names.end(), new_names.begin(), new_names.end());

  std::vector<std::vector<Label>> raw(
      n + extra, std::vector<Label>(n + extra, Label::inf()));
  for (int i = 0; i < n + extra; ++i) raw[i][i] = Label::finite(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw[i][j] = m.label(i, j);
  for (int s = 0; s < extra; ++s)
    for (const auto& name : subsets[s]) {
      const int t = m.index(name);
      raw[n + s][t] = raw[t][n + s] = Label::finite(2);
    }
  return validate_matrix(raw, names);
}

bool verify_mirror_nerve(const CoxeterMatrix& m,
                         const std::vector<GeneratorSet>& subsets,
                         const std::vector<std::string>& new_names,
                         int max_rank) {
  const CoxeterMatrix doubled = mirror_double(m, subsets, new_names);
  const LabelledComplex actual = nerve(doubled, max_rank);

  // No simplex of the double may contain two of the new apexes.
  for (Subset s : actual.simplex_masks()) {
    int apexes = 0;
    for (const auto& name : new_names)
      if (s >> actual.vertex_index(name) & 1) ++apexes;
    if (apexes > 1) return false;
  }

  // Expected: the base nerve with one cone per mirrored subcomplex.
  const LabelledComplex base = nerve(m, max_rank);
  std::set<Subset> simplices(base.simplex_masks());
  std::map<Subset, int> labels(base.edge_labels());
  std::vector<std::string> names = base.vertex_names();
  const int n = base.vertex_count();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    names.push_back(new_names[i]);
    const Subset apex = Subset{1} << (n + i);
    simplices.insert(apex);
    const Subset sub = base.mask_of(subsets[i]);
    for (Subset s : base.simplex_masks())
      if (!(s & ~sub)) {
        simplices.insert(s | apex);
        if (std::popcount(s) == 1) labels[s | apex] = 2;
      }
  }
  const LabelledComplex expected = LabelledComplex::from_masks(
      std::move(names), std::move(simplices), std::move(labels));
  return actual == expected;
}

}  // namespace nervecheck
