#include <doctest.h>

#include <bit>

#include "nervecheck/doubling.hpp"
#include "support/oracles.hpp"

using namespace nervecheck;
using namespace nervecheck::testing;

namespace {
Label L(int m) { return Label::finite(m); }
}

TEST_CASE("mirror_double builds the documented matrix") {
  const CoxeterMatrix i23 =
      validate_matrix({{L(1), L(3)}, {L(3), L(1)}},
                      std::vector<std::string>{"a", "b"});
  const CoxeterMatrix d = mirror_double(i23, {{"a"}}, {"m"});
  CHECK(d.rank() == 3);
  CHECK(d.label("a", "b") == L(3));
  CHECK(d.label("m", "a") == L(2));
  CHECK(d.label("m", "b").is_inf());

  SUBCASE("empty subset: a free Z/2 factor") {
    const CoxeterMatrix free2 = mirror_double(i23, {GeneratorSet{}}, {"m"});
    CHECK(free2.label("m", "a").is_inf());
    CHECK(free2.label("m", "b").is_inf());
  }
  SUBCASE("two new generators never commute") {
    const CoxeterMatrix two =
        mirror_double(i23, {{"a"}, {"a", "b"}}, {"m1", "m2"});
    CHECK(two.label("m1", "m2").is_inf());
  }
  SUBCASE("name clashes are rejected") {
    CHECK_THROWS_AS(mirror_double(i23, {{"a"}}, {"a"}), Error);
    CHECK_THROWS_AS(mirror_double(i23, {{"a"}, {"b"}}, {"m", "m"}), Error);
    CHECK_THROWS_AS(mirror_double(i23, {{"zz"}}, {"m"}), Error);
  }
  SUBCASE("pentagon doubled over its five edges") {
    const CoxeterMatrix pentagon = racg_matrix(5, cycle_edges(5));
    std::vector<GeneratorSet> edges;
    std::vector<std::string> names;
    for (int i = 0; i < 5; ++i) {
      edges.push_back({pentagon.name(i), pentagon.name((i + 1) % 5)});
      names.push_back("s" + std::to_string(i + 1));
    }
    CHECK(mirror_double(pentagon, edges, names).rank() == 10);
    CHECK(verify_mirror_nerve(pentagon, edges, names));
  }
}

TEST_CASE("the nerve of the double adds one cone per subset") {
  const CoxeterMatrix i23 =
      validate_matrix({{L(1), L(3)}, {L(3), L(1)}},
                      std::vector<std::string>{"a", "b"});
  CHECK(verify_mirror_nerve(i23, {{"a"}}, {"m"}));

  // Direct look at the doubled nerve.
  const LabelledComplex k = nerve(mirror_double(i23, {{"a"}}, {"m"}));
  CHECK(k.contains({"a", "b"}));
  CHECK(k.edge_label("a", "b") == 3);
  CHECK(k.contains({"m", "a"}));
  CHECK(k.edge_label("m", "a") == 2);
  CHECK(!k.contains({"m", "b"}));

  CHECK(verify_mirror_nerve(infinite_dihedral(), {{"g1"}}, {"m"}));
}

TEST_CASE("mirror nerve identity on random systems") {
  std::mt19937_64 rng(89);
  const LabelDistribution dist{{L(2), L(3), L(5), Label::inf()}, {}};
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const CoxeterMatrix m = random_matrix(n, dist, rng());
    const int count = 1 + static_cast<int>(rng() % 3);
    std::vector<GeneratorSet> subsets;
    std::vector<std::string> new_names;
    for (int i = 0; i < count; ++i) {
      Subset mask = rng() & ((Subset{1} << n) - 1);
      subsets.push_back(m.set_of(mask));
      new_names.push_back("m" + std::to_string(i));
    }
    CHECK(verify_mirror_nerve(m, subsets, new_names, kDefaultMaxRank + 3));
  }
}

TEST_CASE("indecomposability survives doubling over proper subsets") {
  std::mt19937_64 rng(97);
  const LabelDistribution dist{{L(2), L(3), Label::inf()}, {}};
  int checked = 0;
  while (checked < 30) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const CoxeterMatrix m = random_matrix(n, dist, rng());
    if (!product_factors(m).indecomposable()) continue;
    std::vector<GeneratorSet> subsets;
    std::vector<std::string> new_names;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      Subset mask = rng() & ((Subset{1} << n) - 1);
      if (std::popcount(mask) == n) mask &= mask - 1;  // keep it proper
      subsets.push_back(m.set_of(mask));
      new_names.push_back("m" + std::to_string(i));
    }
    CHECK(product_factors(mirror_double(m, subsets, new_names))
              .indecomposable());
    ++checked;
  }
}
