#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"

using namespace nervecheck;
using namespace nervecheck::testing;

namespace {
Label L(int m) { return Label::finite(m); }
}

TEST_CASE("strip_finite_factors") {
  SUBCASE("all finite") {
    const auto [core, finite_part] =
        strip_finite_factors(uniform_matrix(3, L(2)));
    CHECK(!core.has_value());
    CHECK(finite_part.size() == 3);
  }
  SUBCASE("infinite dihedral times Z/2") {
    const CoxeterMatrix m = triangle_matrix(Label::inf(), L(2), L(2));
    const auto [core, finite_part] = strip_finite_factors(m);
    REQUIRE(core.has_value());
    CHECK(core->rank() == 2);
    CHECK(finite_part == GeneratorSet{"g3"});
  }
  SUBCASE("pentagon is its own core") {
    const auto [core, finite_part] =
        strip_finite_factors(racg_matrix(5, cycle_edges(5)));
    REQUIRE(core.has_value());
    CHECK(core->rank() == 5);
    CHECK(finite_part.empty());
  }
}

TEST_CASE("classifier on the corpus systems") {
  auto boundary_class = [](const CoxeterMatrix& m) {
    return classify(m).boundary_class;
  };

  CHECK(boundary_class(racg_matrix(5, cycle_edges(5))) ==
        BoundaryClass::Circle);
  CHECK(boundary_class(triangle_matrix(L(2), L(3), L(7))) ==
        BoundaryClass::Circle);
  CHECK(boundary_class(uniform_matrix(3, L(3))) ==
        BoundaryClass::NotHyperbolic);
  CHECK(boundary_class(racg_matrix(4, cycle_edges(4))) ==
        BoundaryClass::NotHyperbolic);
  CHECK(boundary_class(uniform_matrix(4, L(2))) ==
        BoundaryClass::EmptyBoundary);
  CHECK(boundary_class(infinite_dihedral()) == BoundaryClass::TwoPoints);
  CHECK(boundary_class(uniform_matrix(3, Label::inf())) ==
        BoundaryClass::MultiEnded);
  CHECK(boundary_class(uniform_matrix(4, L(4))) == BoundaryClass::Sierpinski);
  CHECK(boundary_class(racg_matrix(20, dodecahedron_edges())) ==
        BoundaryClass::Sierpinski);
  CHECK(boundary_class(racg_matrix(10, petersen_edges())) ==
        BoundaryClass::Menger);
  CHECK(boundary_class(uniform_matrix(5, L(5))) == BoundaryClass::Menger);
  CHECK(boundary_class(racg_matrix(12, icosahedron_edges())) ==
        BoundaryClass::Sphere2);
}

TEST_CASE("reports carry reproducible evidence") {
  const ClassificationReport report = classify(uniform_matrix(5, L(5)));
  CHECK(report.boundary_class == BoundaryClass::Menger);
  CHECK(report.boundary_dim == 1);
  CHECK(report.hyperbolicity.hyperbolic);
  REQUIRE(report.unseparability.has_value());
  CHECK(report.unseparability->unseparable);
  REQUIRE(report.planarity.has_value());
  CHECK(!report.planarity->verdict);
  REQUIRE(report.pcd_result.has_value());
  CHECK(report.pcd_result->value == 1);
  CHECK(report.core_generators.size() == 5);
  CHECK(report.nerve_simplex_counts == std::vector<int>{5, 10});

  const ClassificationReport affine = classify(uniform_matrix(3, L(3)));
  REQUIRE(affine.hyperbolicity.witness.has_value());
  const auto* w = std::get_if<AffineWitness>(&*affine.hyperbolicity.witness);
  REQUIRE(w != nullptr);
  CHECK(w->tag.str() == "~A2");
}

TEST_CASE("branch ordering carve-outs") {
  // A circle triangulation on >= 4 vertices is never unseparable, yet it
  // must classify as Circle, not OneEndedWithLocalCutPoints.
  CHECK(classify(racg_matrix(6, cycle_edges(6))).boundary_class ==
        BoundaryClass::Circle);
  // The 3-cycle nerve is excluded from Sierpinski and lands in Circle.
  CHECK(classify(uniform_matrix(3, L(5))).boundary_class ==
        BoundaryClass::Circle);
}

TEST_CASE("a local cut point demotes the boundary class") {
  // Right-angled system on a theta graph (two poles joined by three
  // internally disjoint 3-edge paths): girth 6, so hyperbolic, and no
  // single closed simplex cuts it, but the nonadjacent pole pair does.
  const CoxeterMatrix m = racg_matrix(
      8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7},
          {7, 1}});
  const ClassificationReport report = classify(m);
  CHECK(report.boundary_class == BoundaryClass::OneEndedWithLocalCutPoints);
  REQUIRE(report.unseparability.has_value());
  REQUIRE(report.unseparability->witness.has_value());
  CHECK(report.unseparability->witness->kind ==
        SeparationWitness::Kind::SeparatingPair);
  CHECK(report.unseparability->witness->removed ==
        std::vector<std::string>{"g1", "g2"});
}

TEST_CASE("higher-dimensional boundaries fall through to the last branch") {
  // The compact hyperbolic 4-simplex group with diagram path (5,3,3,3):
  // every proper subset is spherical (H4, A4 and their products), so the
  // nerve is the boundary of the 4-simplex, a 3-sphere. Unseparable and
  // 3-dimensional, hence not planar and pcd 3.
  std::vector<std::vector<Label>> raw(5, std::vector<Label>(5, L(2)));
  for (int i = 0; i < 5; ++i) raw[i][i] = L(1);
  const int path_labels[4] = {5, 3, 3, 3};
  for (int i = 0; i < 4; ++i)
    raw[i][i + 1] = raw[i + 1][i] = L(path_labels[i]);
  const CoxeterMatrix simplex_group = validate_matrix(raw);

  const ClassificationReport report = classify(simplex_group);
  CHECK(report.boundary_class == BoundaryClass::OtherHigherDimensional);
  CHECK(report.boundary_dim == 3);
  CHECK(report.nerve_simplex_counts == std::vector<int>{5, 10, 10, 5});
  REQUIRE(report.planarity.has_value());
  CHECK(report.planarity->obstruction ==
        PlanarityCertificate::Obstruction::Dim3Plus);
}

TEST_CASE("classification is invariant under generator permutation") {
  std::mt19937_64 rng(101);
  const LabelDistribution dist{{L(2), L(3), L(5), Label::inf()}, {}};
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const CoxeterMatrix m = random_matrix(n, dist, rng());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Label>> raw(n, std::vector<Label>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) raw[i][j] = m.label(perm[i], perm[j]);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(m.name(perm[i]));
    const CoxeterMatrix shuffled = validate_matrix(raw, names);

    const ClassificationReport a = classify(m);
    const ClassificationReport b = classify(shuffled);
    CHECK(a.boundary_class == b.boundary_class);
    CHECK(a.boundary_dim == b.boundary_dim);
  }
}

TEST_CASE("classification ignores label-2-connected finite factors") {
  std::mt19937_64 rng(103);
  const LabelDistribution dist{{L(2), L(3), L(5), Label::inf()}, {}};
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const CoxeterMatrix m = random_matrix(n, dist, rng());
    // Append one generator commuting with everything.
    std::vector<std::vector<Label>> raw(n + 1,
                                        std::vector<Label>(n + 1, L(2)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) raw[i][j] = m.label(i, j);
    raw[n][n] = L(1);
    std::vector<std::string> names = m.generators();
    names.push_back("extra");
    const CoxeterMatrix extended = validate_matrix(raw, names);

    const ClassificationReport a = classify(m);
    const ClassificationReport b = classify(extended);
    if (a.boundary_class == BoundaryClass::EmptyBoundary) {
      CHECK(b.boundary_class == BoundaryClass::EmptyBoundary);
    } else {
      CHECK(a.boundary_class == b.boundary_class);
      CHECK(a.boundary_dim == b.boundary_dim);
    }
  }
}

TEST_CASE("branch predicates re-evaluate consistently on the report") {
  const std::vector<CoxeterMatrix> corpus = {
      racg_matrix(5, cycle_edges(5)),      triangle_matrix(L(2), L(3), L(7)),
      uniform_matrix(3, L(3)),             racg_matrix(4, cycle_edges(4)),
      uniform_matrix(4, L(2)),             infinite_dihedral(),
      uniform_matrix(3, Label::inf()),     uniform_matrix(4, L(4)),
      uniform_matrix(5, L(5)),             racg_matrix(10, petersen_edges()),
      racg_matrix(12, icosahedron_edges())};
  for (const CoxeterMatrix& m : corpus) {
    const ClassificationReport report = classify(m);
    const bool hyperbolic = is_word_hyperbolic(m).hyperbolic;
    CHECK(hyperbolic == report.hyperbolicity.hyperbolic);
    if (!hyperbolic) {
      CHECK(report.boundary_class == BoundaryClass::NotHyperbolic);
      continue;
    }
    const auto [core, finite_part] = strip_finite_factors(m);
    if (!core) {
      CHECK(report.boundary_class == BoundaryClass::EmptyBoundary);
      continue;
    }
    const LabelledComplex l = nerve(*core);
    const bool doubleton = is_doubleton(l);
    const bool multi = !is_connected(l) || !separating_simplices(l).empty();
    const bool circle = is_S1_triangulation(l);
    const bool sphere = is_S2_triangulation(l);
    const bool unsep = is_unseparable(l).unseparable;
    switch (report.boundary_class) {
      case BoundaryClass::TwoPoints:
        CHECK(doubleton);
        break;
      case BoundaryClass::MultiEnded:
        CHECK(!doubleton);
        CHECK(multi);
        break;
      case BoundaryClass::Circle:
        CHECK(!doubleton);
        CHECK(!multi);
        CHECK(circle);
        break;
      case BoundaryClass::Sphere2:
        CHECK(!(doubleton || multi || circle));
        CHECK(sphere);
        break;
      case BoundaryClass::Sierpinski:
        CHECK(!(doubleton || multi || circle || sphere));
        CHECK(unsep);
        CHECK(is_planar_complex(l).verdict);
        CHECK(!is_3_cycle(l));
        CHECK(pcd(l).value == 1);
        break;
      case BoundaryClass::Menger:
        CHECK(!(doubleton || multi || circle || sphere));
        CHECK(unsep);
        CHECK(!is_planar_complex(l).verdict);
        CHECK(pcd(l).value == 1);
        break;
      default:
        break;
    }
  }
}
