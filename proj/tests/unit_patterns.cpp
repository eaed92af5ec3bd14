#include "doctest.h"

#include <cmath>
#include <set>
#include <stdexcept>

#include "matex/containment.hpp"
#include "matex/patterns.hpp"
#include "matex/rng.hpp"
#include "oracles.hpp"

using namespace matex;
using oracles::make;

TEST_CASE("identity_permutation") {
  CHECK(identity_permutation(1, 2).tensor == Tensor01::full(Shape({1, 1})));
  CHECK(identity_permutation(2, 3).tensor == make({2, 2, 2}, {{1, 1, 1}, {2, 2, 2}}));
  CHECK(identity_permutation(5, 4).tensor.ones_count() == 5);
  CHECK(identity_permutation(3, 2).kind == PatternKind::permutation);
}

TEST_CASE("permutation_from_maps") {
  CHECK(permutation_from_maps(3, {{1, 2, 3}}).tensor == identity_permutation(3, 2).tensor);
  CHECK(permutation_from_maps(2, {{2, 1}}).tensor == make({2, 2}, {{1, 2}, {2, 1}}));
  CHECK(permutation_from_maps(4, {{2, 4, 1, 3}}).tensor ==
        make({4, 4}, {{1, 2}, {2, 4}, {3, 1}, {4, 3}}));
  CHECK_THROWS_AS(permutation_from_maps(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(permutation_from_maps(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("random_permutation") {
  CHECK(random_permutation(1, 3, 42).tensor.ones_count() == 1);
  CHECK(random_permutation(4, 2, 42).tensor == random_permutation(4, 2, 42).tensor);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Tensor01 p = random_permutation(6, 3, seed).tensor;
    CHECK(is_permutation(p));
    for (int axis = 1; axis <= 3; ++axis)
      for (int idx = 1; idx <= 6; ++idx)
        CHECK(cross_section(p, axis, idx).ones_count() == 1);
  }
}

TEST_CASE("random_permutation_with_corner") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PatternSpec p = random_permutation_with_corner(3, 2, seed);
    CHECK(is_permutation(p.tensor));
    bool corner = false;
    for (const Coord& c : p.tensor.ones()) {
      bool at = true;
      for (int l = 0; l < 2; ++l)
        if (c[l] != 1 && c[l] != 3) at = false;
      corner = corner || at;
    }
    CHECK(corner);
  }
}

TEST_CASE("all_ones") {
  CHECK(all_ones({1}).tensor == Tensor01::full(Shape({1})));
  CHECK(all_ones({2, 2}).tensor == Tensor01::full(Shape({2, 2})));
  CHECK(all_ones({2, 3, 2}).tensor.ones_count() == 12);
  CHECK(all_ones({2, 2}).kind == PatternKind::all_ones);
}

TEST_CASE("block_permutation") {
  PatternSpec dbl = block_permutation(identity_permutation(2, 2), {2, 1});
  CHECK(dbl.tensor == make({4, 2}, {{1, 1}, {2, 1}, {3, 2}, {4, 2}}));
  CHECK(dbl.kind == PatternKind::tuple_permutation);
  CHECK(dbl.tuple_axis == 1);
  CHECK(dbl.tuple_arity == 2);

  PatternSpec same = block_permutation(identity_permutation(3, 2), {1, 1});
  CHECK(same.tensor == identity_permutation(3, 2).tensor);

  PatternSpec blk = block_permutation(identity_permutation(3, 2), {2, 2});
  CHECK(blk.tensor.ones_count() == 3 * 4);
  CHECK(blk.kind == PatternKind::block_permutation);

  PatternSpec not_perm = all_ones({2, 2});
  CHECK_THROWS_AS(block_permutation(not_perm, {2, 1}), std::invalid_argument);
}

TEST_CASE("tuple_permutation_family") {
  auto fam1 = tuple_permutation_family(1, 2, 2);
  CHECK(fam1.size() == 2);  // both 2x2 permutation matrices
  auto fam2 = tuple_permutation_family(2, 2, 2);
  CHECK(fam2.size() == 4);  // 2 generators x 2 tuple-axis placements
  for (const auto& m : fam2) {
    CHECK(m.tuple_arity == 2);
    CHECK(m.tensor.ones_count() == 4);
  }
  CHECK_THROWS_AS(tuple_permutation_family(2, 5, 3), std::invalid_argument);
}

TEST_CASE("classify_pattern") {
  CHECK(classify_pattern(identity_permutation(3, 2).tensor).kind ==
        PatternKind::permutation);
  CHECK(classify_pattern(Tensor01::full(Shape({2, 3}))).kind == PatternKind::all_ones);
  PatternSpec dbl = classify_pattern(
      block_permutation(identity_permutation(2, 2), {2, 1}).tensor);
  CHECK(dbl.kind == PatternKind::tuple_permutation);
  CHECK(dbl.tuple_axis == 1);
  CHECK(classify_pattern(make({3, 3}, {{1, 1}, {1, 3}, {2, 2}})).kind ==
        PatternKind::custom);
}

TEST_CASE("corner_construction") {
  ConstructionReport r = corner_construction(identity_permutation(2, 2), 3);
  CHECK(r.ones == 5);
  CHECK(r.avoided);

  ConstructionReport r3 = corner_construction(identity_permutation(2, 3), 2);
  CHECK(r3.ones == 7);
  CHECK(r3.avoided);

  // n = k-1: the zero box is empty, the output is all ones
  ConstructionReport edge = corner_construction(identity_permutation(3, 2), 2);
  CHECK(edge.ones == 4);
  CHECK(edge.output == Tensor01::full(Shape({2, 2})));
  CHECK(edge.avoided);

  CHECK_THROWS_AS(corner_construction(identity_permutation(2, 2), Coord{1, 2}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(corner_construction(all_ones({2, 2}), 4), std::invalid_argument);
}

TEST_CASE("deletion_construction") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    ConstructionReport r = deletion_construction({2, 2}, 8, seed);
    CHECK(r.avoided);
    CHECK(!contains(r.output, Tensor01::full(Shape({2, 2}))));
    CHECK(r.p == doctest::Approx(std::pow(8.0, -2.0 / 3.0)));
  }
  CHECK_THROWS_AS(deletion_construction({1, 1}, 4, 0), std::invalid_argument);
}

TEST_CASE("antidiagonal_multiplier") {
  CHECK(antidiagonal_multiplier(1, 3) == make({1, 1, 1}, {{1, 1, 1}}));
  CHECK(antidiagonal_multiplier(3, 2) == make({3, 3}, {{1, 3}, {2, 2}, {3, 1}}));
}

TEST_CASE("antidiagonal counts and antichain property") {
  Tensor01 m = antidiagonal_multiplier(2, 3);
  CHECK(m.ones_count() == 3);  // C(3,2)
  CHECK(m == make({2, 2, 2}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));

  // no two distinct ones are componentwise comparable
  Tensor01 big = antidiagonal_multiplier(4, 3);
  auto ones = big.ones();
  for (std::size_t i = 0; i < ones.size(); ++i)
    for (std::size_t j = 0; j < ones.size(); ++j) {
      if (i == j) continue;
      bool all_le = true;
      for (int l = 0; l < 3; ++l) all_le = all_le && ones[i][l] <= ones[j][l];
      CHECK(!all_le);
    }
}

TEST_CASE("enumerate_dyadic_intervals") {
  auto one = enumerate_dyadic_intervals(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == DyadicInterval{1, 1});

  auto two = enumerate_dyadic_intervals(2);
  REQUIRE(two.size() == 3);

  auto four = enumerate_dyadic_intervals(4);
  CHECK(four.size() == 7);
  for (int point = 1; point <= 4; ++point) {
    int covering = 0;
    for (const auto& iv : four)
      if (iv.start <= point && point < iv.start + iv.length) ++covering;
    CHECK(covering == 3);  // r + 1 with r = 2
  }
  CHECK_THROWS_AS(enumerate_dyadic_intervals(3), std::invalid_argument);
}

TEST_CASE("dyadic_construction") {
  DyadicParams params = DyadicParams::paper(2, 2, 7);
  CHECK(params.q == doctest::Approx(std::log(2.0) / 4.0));

  DyadicOutcome out = dyadic_construction(params);
  // every surviving 1-cell is covered by no sampled rectangle
  for (const Coord& c : out.report.output.ones())
    for (const auto& rect : out.sampled) {
      bool covered = true;
      for (int l = 0; l < 2; ++l)
        covered = covered && rect[l].start <= c[l] && c[l] < rect[l].start + rect[l].length;
      CHECK(!covered);
    }

  // with q ~ 0 nothing is sampled and the output is all ones
  DyadicParams tiny = params;
  tiny.q = 1e-12;
  tiny.q_overridden = true;
  DyadicOutcome full = dyadic_construction(tiny);
  CHECK(full.sampled.empty());
  CHECK(full.report.output == Tensor01::full(Shape({4, 4})));
}

TEST_CASE("canonical_hash tracks content") {
  PatternSpec a = identity_permutation(2, 2);
  PatternSpec b = identity_permutation(2, 2);
  CHECK(a.canonical_hash() == b.canonical_hash());
  CHECK(a.canonical_hash() != permutation_from_maps(2, {{2, 1}}).canonical_hash());
}
