#include <doctest.h>

#include "support/oracles.hpp"

using namespace nervecheck;
using namespace nervecheck::testing;

TEST_CASE("construction validates its invariants") {
  CHECK_THROWS_AS(
      LabelledComplex::make({"a", "b"}, {{"a"}, {"b"}, {"a", "b"}}, {}),
      Error);  // unlabelled edge
  CHECK_THROWS_AS(LabelledComplex::make({"a", "b", "c"},
                                        {{"a"}, {"b"}, {"c"}, {"a", "b", "c"}},
                                        {}),
                  Error);  // not face-closed
  CHECK_THROWS_AS(LabelledComplex::make({"a"}, {{"a"}, {"b"}}, {}), Error);

  const LabelledComplex k = LabelledComplex::make(
      {"a", "b"}, {{"a"}, {"b"}, {"a", "b"}}, {{{"a", "b"}, 3}});
  CHECK(k.edge_label("a", "b") == 3);
  CHECK(k.dim() == 1);
}

TEST_CASE("full subcomplex") {
  const LabelledComplex square = cycle_complex(4);
  CHECK(full_subcomplex(square, {"g1", "g2", "g3", "g4"}) == square);

  const LabelledComplex edge = full_subcomplex(square, {"g1", "g2"});
  CHECK(edge.vertex_count() == 2);
  CHECK(edge.simplex_masks().size() == 3);
  CHECK(edge.edge_label("g1", "g2") == 2);

  const LabelledComplex diagonal = full_subcomplex(square, {"g1", "g3"});
  CHECK(diagonal.vertex_count() == 2);
  CHECK(diagonal.dim() == 0);
  CHECK(!is_connected(diagonal));

  CHECK_THROWS_AS(full_subcomplex(square, {"nope"}), Error);
}

TEST_CASE("labelled join") {
  const LabelledComplex point_u = LabelledComplex::make({"u"}, {{"u"}}, {});
  const LabelledComplex point_w = LabelledComplex::make({"w"}, {{"w"}}, {});

  const LabelledComplex edge = labelled_join(point_u, point_w);
  CHECK(edge.dim() == 1);
  CHECK(edge.edge_label("u", "w") == 2);

  const LabelledComplex doubleton =
      LabelledComplex::make({"u", "v"}, {{"u"}, {"v"}}, {});
  const LabelledComplex path = labelled_join(doubleton, point_w);
  CHECK(path.simplex_counts_per_dim() == std::vector<int>{3, 2});
  CHECK(path.edge_label("u", "w") == 2);
  CHECK(path.edge_label("v", "w") == 2);
  CHECK(!path.contains({"u", "v"}));

  const LabelledComplex base = LabelledComplex::make(
      {"a", "b"}, {{"a"}, {"b"}, {"a", "b"}}, {{{"a", "b"}, 5}});
  const LabelledComplex triangle = labelled_join(base, point_w);
  CHECK(triangle.dim() == 2);
  CHECK(triangle.contains({"a", "b", "w"}));
  CHECK(triangle.edge_label("a", "b") == 5);

  CHECK_THROWS_AS(labelled_join(point_u, point_u), Error);
}

TEST_CASE("cone equals join with a point") {
  const LabelledComplex square = cycle_complex(4);
  const LabelledComplex apex = LabelledComplex::make({"z"}, {{"z"}}, {});
  CHECK(cone(square, "z") == labelled_join(square, apex));
  CHECK_THROWS_AS(cone(square, "g1"), Error);
}

TEST_CASE("join is associative up to vertex identity") {
  std::mt19937_64 rng(17);
  auto renamed = [](const LabelledComplex& k, const std::string& prefix) {
    std::vector<std::string> names;
    for (const auto& v : k.vertex_names()) names.push_back(prefix + v);
    return LabelledComplex::from_masks(names, k.simplex_masks(),
                                       k.edge_labels());
  };
  for (int trial = 0; trial < 10; ++trial) {
    const LabelledComplex a = renamed(random_complex(rng, 3), "a");
    const LabelledComplex b = renamed(random_complex(rng, 3), "b");
    const LabelledComplex c = renamed(random_complex(rng, 3), "c");
    CHECK(labelled_join(labelled_join(a, b), c) ==
          labelled_join(a, labelled_join(b, c)));
  }
}

TEST_CASE("join commutes with full subcomplexes of the factors") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    LabelledComplex k1 = random_complex(rng, 4);
    // Keep the vertex names of the two factors disjoint.
    std::vector<std::string> renamed;
    for (const auto& v : k1.vertex_names()) renamed.push_back("L" + v);
    std::set<Subset> simplices = k1.simplex_masks();
    std::map<Subset, int> labels = k1.edge_labels();
    k1 = LabelledComplex::from_masks(renamed, std::move(simplices),
                                     std::move(labels));
    const LabelledComplex k2 = random_complex(rng, 4);

    std::set<std::string> v1, v2;
    for (const auto& v : k1.vertex_names())
      if (rng() % 2) v1.insert(v);
    for (const auto& v : k2.vertex_names())
      if (rng() % 2) v2.insert(v);

    std::set<std::string> both = v1;
    both.insert(v2.begin(), v2.end());
    CHECK(full_subcomplex(labelled_join(k1, k2), both) ==
          labelled_join(full_subcomplex(k1, v1), full_subcomplex(k2, v2)));
  }
}

TEST_CASE("basic recognizers") {
  const LabelledComplex point = LabelledComplex::make({"a"}, {{"a"}}, {});
  CHECK(is_connected(point));
  CHECK(point.dim() == 0);
  CHECK(is_simplex(point));

  const LabelledComplex two_points =
      LabelledComplex::make({"a", "b"}, {{"a"}, {"b"}}, {});
  CHECK(!is_connected(two_points));

  const LabelledComplex hollow = cycle_complex(3);
  CHECK(is_connected(hollow));
  CHECK(hollow.dim() == 1);
  CHECK(!is_simplex(hollow));

  const LabelledComplex empty;
  CHECK(!is_connected(empty));
  CHECK(empty.dim() == -1);
}

TEST_CASE("3-cycle recognition") {
  CHECK(is_3_cycle(cycle_complex(3)));
  CHECK(!is_3_cycle(cycle_complex(4)));
  const LabelledComplex filled = LabelledComplex::closure_of(
      default_names(3), {{"g1", "g2", "g3"}},
      {{{"g1", "g2"}, 2}, {{"g2", "g3"}, 2}, {{"g1", "g3"}, 2}});
  CHECK(!is_3_cycle(filled));
}

TEST_CASE("circle triangulations") {
  CHECK(is_S1_triangulation(cycle_complex(5)));
  CHECK(is_S1_triangulation(cycle_complex(3)));
  const LabelledComplex path = graph_complex(3, {{0, 1}, {1, 2}});
  CHECK(!is_S1_triangulation(path));
  LabelledComplex two_triangles = graph_complex(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!is_S1_triangulation(two_triangles));
}

TEST_CASE("sphere triangulations") {
  CHECK(is_S2_triangulation(tetrahedron_boundary()));
  CHECK(is_S2_triangulation(octahedron_boundary()));
  CHECK(is_S2_triangulation(icosahedron_boundary()));

  const LabelledComplex filled = LabelledComplex::closure_of(
      default_names(3), {{"g1", "g2", "g3"}},
      {{{"g1", "g2"}, 2}, {{"g2", "g3"}, 2}, {{"g1", "g3"}, 2}});
  CHECK(!is_S2_triangulation(filled));
  // Closed surface with good links but Euler characteristic 1.
  CHECK(!is_S2_triangulation(projective_plane()));
  CHECK(!is_S2_triangulation(cycle_complex(5)));
}
