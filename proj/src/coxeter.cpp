#include "nervecheck/coxeter.hpp"

#include <algorithm>
#include <random>

namespace nervecheck {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::BadOffDiagonal: return "BadOffDiagonal";
    case Errc::DuplicateName: return "DuplicateName";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::BadLabelSet: return "BadLabelSet";
    case Errc::NotConnected: return "NotConnected";
    case Errc::RankGuardExceeded: return "RankGuardExceeded";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::VertexClash: return "VertexClash";
    case Errc::NotASimplex: return "NotASimplex";
    case Errc::EmptyComplex: return "EmptyComplex";
    case Errc::NotHyperbolic: return "NotHyperbolic";
    case Errc::FiniteGroup: return "FiniteGroup";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NameClash: return "NameClash";
    case Errc::InvariantBreach: return "InvariantBreach";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

void CoxeterMatrix::rebuild_index() {
  index_.clear();
  for (int i = 0; i < rank(); ++i) index_[names_[i]] = i;
}

int CoxeterMatrix::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error(Errc::UnknownGenerator, "no generator named '" + name + "'");
  return it->second;
}

Subset CoxeterMatrix::mask_of(const GeneratorSet& subset) const {
  Subset mask = 0;
  for (const auto& name : subset) mask |= Subset{1} << index(name);
  return mask;
}

GeneratorSet CoxeterMatrix::set_of(Subset mask) const {
  GeneratorSet out;
  for (int i = 0; i < rank(); ++i)
    if (mask >> i & 1) out.insert(names_[i]);
  return out;
}

bool operator==(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  return a.names_ == b.names_ && a.entries_ == b.entries_;
}

CoxeterMatrix validate_matrix(
    const std::vector<std::vector<Label>>& raw,
    const std::optional<std::vector<std::string>>& names) {
  const int n = static_cast<int>(raw.size());
  if (n > kHardRankLimit)
    throw Error(Errc::RankGuardExceeded,
                "rank " + std::to_string(n) + " exceeds the hard limit of " +
                    std::to_string(kHardRankLimit));
  for (const auto& row : raw)
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::NonSquare, "expected " + std::to_string(n) +
                                       " entries per row, found " +
                                       std::to_string(row.size()));

  CoxeterMatrix m;
  if (names) {
    if (static_cast<int>(names->size()) != n)
      throw Error(Errc::NonSquare, "name count does not match rank");
    m.names_ = *names;
  } else {
    for (int i = 0; i < n; ++i) m.names_.push_back("g" + std::to_string(i + 1));
  }
  {
    std::set<std::string> seen;
    for (const auto& name : m.names_)
      if (!seen.insert(name).second)
        throw Error(Errc::DuplicateName, "generator '" + name + "'");
  }

  m.entries_.assign(static_cast<std::size_t>(n) * n, Label::finite(1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Label l = raw[i][j];
      if (i == j) {
        if (l != Label::finite(1))
          throw Error(Errc::BadDiagonal,
                      "entry (" + m.names_[i] + "," + m.names_[j] + ") is " +
                          l.str() + ", diagonal entries must be 1");
      } else {
        if (l != raw[j][i])
          throw Error(Errc::NonSymmetric,
                      "entries (" + m.names_[i] + "," + m.names_[j] +
                          ") and (" + m.names_[j] + "," + m.names_[i] +
                          ") differ");
        if (l.is_finite() && l.value() < 2)
          throw Error(Errc::BadOffDiagonal,
                      "entry (" + m.names_[i] + "," + m.names_[j] + ") is " +
                          l.str() + ", off-diagonal entries must be >= 2");
      }
      m.entries_[static_cast<std::size_t>(i) * n + j] = l;
    }
  }
  m.rebuild_index();
  return m;
}

CoxeterMatrix restrict_to(const CoxeterMatrix& m, const GeneratorSet& subset) {
  if (subset.empty())
    throw Error(Errc::EmptySubset, "cannot restrict to the empty subset");
  std::vector<std::string> names;
  for (const auto& name : m.generators())
    if (subset.count(name)) names.push_back(name);
  if (names.size() != subset.size())
    for (const auto& name : subset)
      if (!m.has_generator(name))
        throw Error(Errc::UnknownGenerator, "'" + name + "'");

  const int k = static_cast<int>(names.size());
  std::vector<std::vector<Label>> raw(k, std::vector<Label>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) raw[i][j] = m.label(names[i], names[j]);
  return validate_matrix(raw, names);
}

namespace {

// Connected components of the graph on `subset` whose edges are the pairs
// with label != 2 (equivalently: label >= 3 or inf).
std::vector<Subset> noncommuting_components(const CoxeterMatrix& m,
                                            Subset subset) {
  std::vector<Subset> components;
  Subset remaining = subset;
  while (remaining) {
    const int start = std::countr_zero(remaining);
    Subset comp = 0;
    Subset frontier = Subset{1} << start;
    while (frontier) {
      comp |= frontier;
      Subset next = 0;
      for (Subset f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        for (Subset rest = subset & ~comp; rest;) {
          const int w = std::countr_zero(rest);
          rest &= rest - 1;
          if (m.label(v, w) != Label::finite(2)) next |= Subset{1} << w;
        }
      }
      frontier = next & ~comp;
    }
    components.push_back(comp);
    remaining &= ~comp;
  }
  return components;
}

}  // namespace

FactorDecomposition product_factors(const CoxeterMatrix& m) {
  const Subset all = m.rank() == 64 ? ~Subset{0} : (Subset{1} << m.rank()) - 1;
  FactorDecomposition out;
  for (Subset comp : noncommuting_components(m, all))
    out.factors.push_back(m.set_of(comp));
  return out;
}

std::vector<Subset> diagram_component_masks(const CoxeterMatrix& m,
                                            Subset subset) {
  return noncommuting_components(m, subset);
}

std::vector<GeneratorSet> diagram_components(const CoxeterMatrix& m,
                                             const GeneratorSet& subset) {
  if (subset.empty())
    throw Error(Errc::EmptySubset, "diagram_components of the empty subset");
  std::vector<GeneratorSet> out;
  for (Subset comp : noncommuting_components(m, m.mask_of(subset)))
    out.push_back(m.set_of(comp));
  return out;
}

CoxeterMatrix random_matrix(int n, const LabelDistribution& dist,
                            std::uint64_t seed) {
  if (n < 1) throw Error(Errc::NonSquare, "rank must be >= 1");
  if (dist.labels.empty())
    throw Error(Errc::BadLabelSet, "no labels to sample from");
  for (const Label& l : dist.labels)
    if (l.is_finite() && l.value() < 2)
      throw Error(Errc::BadLabelSet,
                  "label " + l.str() + " cannot appear off the diagonal");
  std::vector<double> weights = dist.weights;
  if (weights.empty()) weights.assign(dist.labels.size(), 1.0);
  if (weights.size() != dist.labels.size())
    throw Error(Errc::BadLabelSet, "weight count does not match label count");
  double total = 0;
  for (double w : weights) {
    if (w <= 0) throw Error(Errc::BadLabelSet, "weights must be positive");
    total += w;
  }

  // mt19937_64 output is portable across platforms, so a fixed seed gives
  // the same matrix everywhere; we avoid std::*_distribution on purpose.
  std::mt19937_64 rng(seed);
  auto sample = [&]() -> Label {
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * total;
    double acc = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      acc += weights[k];
      if (u < acc) return dist.labels[k];
    }
    return dist.labels.back();
  };

  std::vector<std::vector<Label>> raw(n, std::vector<Label>(n, Label::finite(1)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) raw[i][j] = raw[j][i] = sample();
  return validate_matrix(raw);
}

}  // namespace nervecheck
