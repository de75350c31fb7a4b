#include <doctest.h>

#include <algorithm>

#include "nervecheck/separability.hpp"
#include "support/oracles.hpp"

using namespace nervecheck;
using namespace nervecheck::testing;

TEST_CASE("separates") {
  const LabelledComplex path = graph_complex(3, {{0, 1}, {1, 2}});
  const auto split = separates(path, {"g2"});
  REQUIRE(split.has_value());
  CHECK(split->components.size() == 2);

  const LabelledComplex triangle = cycle_complex(3);
  CHECK(!separates(triangle, {"g1"}).has_value());
  // Removing everything leaves the empty remainder: not a separation.
  CHECK(!separates(triangle, {"g1", "g2", "g3"}).has_value());
}

TEST_CASE("separating simplices") {
  const LabelledComplex path = graph_complex(3, {{0, 1}, {1, 2}});
  const auto cuts = separating_simplices(path);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].removed == std::vector<std::string>{"g2"});

  CHECK(separating_simplices(cycle_complex(5)).empty());

  // Two triangles glued at a vertex: the wedge point cuts, and so does
  // every closed edge through it (removing a closed simplex removes its
  // vertices).
  const LabelledComplex wedge = LabelledComplex::closure_of(
      default_names(5),
      {{"g1", "g2", "g3"}, {"g3", "g4", "g5"}},
      {{{"g1", "g2"}, 2}, {{"g1", "g3"}, 2}, {{"g2", "g3"}, 2},
       {{"g3", "g4"}, 2}, {{"g3", "g5"}, 2}, {{"g4", "g5"}, 2}});
  const auto wedge_cuts = separating_simplices(wedge);
  REQUIRE(wedge_cuts.size() == 5);
  CHECK(wedge_cuts[0].removed == std::vector<std::string>{"g3"});
  for (const auto& w : wedge_cuts)
    CHECK(std::find(w.removed.begin(), w.removed.end(), "g3") !=
          w.removed.end());
}

TEST_CASE("separating pairs") {
  const auto square_cuts = separating_pairs(cycle_complex(4));
  REQUIRE(square_cuts.size() == 2);
  CHECK(square_cuts[0].removed == std::vector<std::string>{"g1", "g3"});
  CHECK(square_cuts[1].removed == std::vector<std::string>{"g2", "g4"});

  CHECK(separating_pairs(cycle_complex(3)).empty());

  // Every nonadjacent pair of the 6-cycle separates it.
  CHECK(separating_pairs(cycle_complex(6)).size() == 9);
}

TEST_CASE("separating suspensions") {
  SUBCASE("two squares sharing a label-2 path") {
    // u-w-v is the shared path; x completes one square, y the other. The
    // other square corners work as suspension centers for (u, v) too, so
    // three suspensions separate.
    const LabelledComplex k = graph_complex(
        5, {{0, 1}, {1, 2}, {0, 3}, {2, 3}, {0, 4}, {2, 4}});
    const auto cuts = separating_suspensions(k);
    REQUIRE(cuts.size() == 3);
    CHECK(cuts[0].removed == std::vector<std::string>{"g1", "g2", "g3"});
    for (const auto& w : cuts) CHECK(w.components.size() == 2);
  }
  SUBCASE("5-cycle has none") {
    CHECK(separating_suspensions(cycle_complex(5)).empty());
  }
  SUBCASE("doubleton: empty remainder is no separation") {
    CHECK(separating_suspensions(nerve(infinite_dihedral())).empty());
  }
}

TEST_CASE("is_unseparable") {
  SUBCASE("complete graph on 5 vertices") {
    const auto r = is_unseparable(graph_complex(5, complete_graph_edges(5), 5));
    CHECK(r.unseparable);
    CHECK(!r.witness.has_value());
  }
  SUBCASE("path fails on a separating simplex") {
    const auto r = is_unseparable(graph_complex(3, {{0, 1}, {1, 2}}));
    CHECK(!r.unseparable);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == SeparationWitness::Kind::SeparatingSimplex);
    CHECK(r.witness->removed == std::vector<std::string>{"g2"});
  }
  SUBCASE("4-cycle fails on a separating pair") {
    const auto r = is_unseparable(cycle_complex(4));
    CHECK(!r.unseparable);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == SeparationWitness::Kind::SeparatingPair);
  }
  SUBCASE("disconnected input") {
    const auto r = is_unseparable(
        LabelledComplex::make({"a", "b"}, {{"a"}, {"b"}}, {}));
    CHECK(!r.unseparable);
    CHECK(r.witness->kind == SeparationWitness::Kind::Disconnected);
  }
}

TEST_CASE("witnesses reproduce their component split") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const LabelledComplex k = random_complex(rng, 7);
    auto verify = [&](const SeparationWitness& w) {
      std::set<std::string> keep(k.vertex_names().begin(),
                                 k.vertex_names().end());
      for (const auto& v : w.removed) keep.erase(v);
      const LabelledComplex rest = full_subcomplex(k, keep);
      const auto components = connected_component_masks(rest);
      REQUIRE(components.size() == w.components.size());
      for (std::size_t i = 0; i < components.size(); ++i)
        CHECK(rest.names_of(components[i]) == w.components[i]);
    };
    for (const auto& w : separating_simplices(k)) verify(w);
    for (const auto& w : separating_pairs(k)) verify(w);
    for (const auto& w : separating_suspensions(k)) verify(w);
  }
}

TEST_CASE("circle triangulations with at least 4 vertices always separate") {
  for (int n = 4; n <= 10; ++n) {
    const auto r = is_unseparable(cycle_complex(n));
    CHECK(!r.unseparable);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->kind == SeparationWitness::Kind::SeparatingPair);
  }
}

TEST_CASE("unseparability is invariant under vertex renaming") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const LabelledComplex k = random_complex(rng, 6);
    // Rename g<i> to r<i> in reversed order.
    std::vector<std::string> renamed;
    for (int i = 0; i < k.vertex_count(); ++i)
      renamed.push_back("r" + std::to_string(k.vertex_count() - i));
    const LabelledComplex relabeled = LabelledComplex::from_masks(
        renamed, k.simplex_masks(), k.edge_labels());
    CHECK(is_unseparable(k).unseparable ==
          is_unseparable(relabeled).unseparable);
  }
}
