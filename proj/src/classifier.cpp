#include "nervecheck/classifier.hpp"

namespace nervecheck {

const char* to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::NotHyperbolic: return "NotHyperbolic";
    case BoundaryClass::EmptyBoundary: return "EmptyBoundary";
    case BoundaryClass::TwoPoints: return "TwoPoints";
    case BoundaryClass::MultiEnded: return "MultiEnded";
    case BoundaryClass::Circle: return "Circle";
    case BoundaryClass::Sphere2: return "Sphere2";
    case BoundaryClass::Sierpinski: return "Sierpinski";
    case BoundaryClass::Menger: return "Menger";
    case BoundaryClass::OneEndedWithLocalCutPoints:
      return "OneEndedWithLocalCutPoints";
    case BoundaryClass::OtherHigherDimensional:
      return "OtherHigherDimensional";
  }
  return "?";
}

std::optional<BoundaryClass> boundary_class_from_string(const std::string& s) {
  for (BoundaryClass c :
       {BoundaryClass::NotHyperbolic, BoundaryClass::EmptyBoundary,
        BoundaryClass::TwoPoints, BoundaryClass::MultiEnded,
        BoundaryClass::Circle, BoundaryClass::Sphere2,
        BoundaryClass::Sierpinski, BoundaryClass::Menger,
        BoundaryClass::OneEndedWithLocalCutPoints,
        BoundaryClass::OtherHigherDimensional})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::pair<std::optional<CoxeterMatrix>, GeneratorSet> strip_finite_factors(
    const CoxeterMatrix& m) {
  GeneratorSet finite_part, infinite_part;
  for (const GeneratorSet& factor : product_factors(m).factors) {
    if (is_spherical(m, factor))
      finite_part.insert(factor.begin(), factor.end());
    else
      infinite_part.insert(factor.begin(), factor.end());
  }
  if (infinite_part.empty()) return {std::nullopt, finite_part};
  return {restrict_to(m, infinite_part), finite_part};
}

ClassificationReport classify(const CoxeterMatrix& m,
                              const ClassifyOptions& options) {
  if (m.rank() > options.max_rank)
    throw Error(Errc::RankGuardExceeded,
                "rank " + std::to_string(m.rank()) + " exceeds the guard of " +
                    std::to_string(options.max_rank));

  ClassificationReport report;
  report.generator_names = m.generators();
  for (int i = 0; i < m.rank(); ++i) {
    std::vector<Label> row;
    for (int j = 0; j < m.rank(); ++j) row.push_back(m.label(i, j));
    report.matrix.push_back(std::move(row));
  }

  for (const GeneratorSet& factor : product_factors(m).factors)
    report.factors.push_back({factor, is_spherical(m, factor)});

  // (1) Word hyperbolicity is the precondition for everything else.
  report.hyperbolicity = is_word_hyperbolic(m, options.max_rank);
  if (!report.hyperbolicity.hyperbolic) {
    report.boundary_class = BoundaryClass::NotHyperbolic;
    return report;
  }

  // (2)-(3) Split off the finite factors; hyperbolicity leaves at most one
  // infinite factor.
  auto [core, finite_part] = strip_finite_factors(m);
  if (!core) {
    report.boundary_class = BoundaryClass::EmptyBoundary;
    return report;
  }
  {
    int infinite_factors = 0;
    for (const FactorReport& f : report.factors)
      if (!f.spherical) ++infinite_factors;
    if (infinite_factors > 1)
      throw Error(Errc::InvariantBreach,
                  "two infinite factors in a hyperbolic group");
  }
  report.core_generators = core->generator_set();

  // (4) Everything below happens on the labelled nerve of the core; its
  // pcd is the dimension of the boundary.
  const LabelledComplex l = nerve(*core, options.max_rank);
  report.nerve_simplex_counts = l.simplex_counts_per_dim();
  report.pcd_result = pcd(l);
  report.boundary_dim = report.pcd_result->value;

  // (5) Two ends.
  if (is_doubleton(l)) {
    report.boundary_class = BoundaryClass::TwoPoints;
    return report;
  }

  // (6) More than one end.
  if (!is_connected(l)) {
    report.boundary_class = BoundaryClass::MultiEnded;
    UnseparabilityResult r;
    r.unseparable = false;
    SeparationWitness w;
    w.kind = SeparationWitness::Kind::Disconnected;
    for (Subset comp : connected_component_masks(l))
      w.components.push_back(l.names_of(comp));
    r.witness = std::move(w);
    report.unseparability = std::move(r);
    return report;
  }
  if (auto cuts = separating_simplices(l); !cuts.empty()) {
    report.boundary_class = BoundaryClass::MultiEnded;
    report.unseparability = {false, std::move(cuts.front())};
    return report;
  }

  // (7) Cocompact Fuchsian cores: nerve a circle triangulation (the
  // 3-cycle included).
  if (is_S1_triangulation(l)) {
    report.boundary_class = BoundaryClass::Circle;
    return report;
  }

  // (8) The three-dimensional reflection groups: nerve a 2-sphere.
  if (is_S2_triangulation(l)) {
    report.boundary_class = BoundaryClass::Sphere2;
    return report;
  }

  // (9) Local cut points in the boundary.
  report.unseparability = is_unseparable(l);
  if (!report.unseparability->unseparable) {
    report.boundary_class = BoundaryClass::OneEndedWithLocalCutPoints;
    return report;
  }

  // (10)-(12) The planar/non-planar split.
  try {
    report.planarity = is_planar_complex(l, options.planarity_budget);
  } catch (const SearchBudgetError& e) {
    throw ClassifyBudgetError(e, std::move(report));
  }
  if (report.planarity->verdict) {
    report.boundary_class = BoundaryClass::Sierpinski;
    if (report.pcd_result->value != 1)
      throw Error(Errc::InvariantBreach,
                  "planar unseparable non-simplex nerve must have pcd 1");
    return report;
  }
  if (report.pcd_result->value == 1) {
    report.boundary_class = BoundaryClass::Menger;
    return report;
  }
  report.boundary_class = BoundaryClass::OtherHigherDimensional;
  report.notes.push_back("pcd " + std::to_string(report.pcd_result->value) +
                         "; the boundary type is not pinned down here");
  return report;
}

}  // namespace nervecheck
