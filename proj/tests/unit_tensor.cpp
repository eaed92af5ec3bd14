#include "doctest.h"

#include <stdexcept>

#include "matex/patterns.hpp"
#include "matex/rng.hpp"
#include "matex/tensor.hpp"
#include "oracles.hpp"

using namespace matex;
using oracles::make;

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(Shape({0}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({2, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Shape({2, 2, 2, 2, 2, 2, 2}), std::invalid_argument);  // d > 6
  CHECK_THROWS_AS(Shape({4096, 4096, 2}), std::invalid_argument);        // > 2^24 cells
  CHECK(Shape({3, 4}).cells() == 12);
  CHECK(Shape({3, 4}).extent(2) == 4);
}

TEST_CASE("ones_count") {
  CHECK(Tensor01{Shape({2, 2, 2})}.ones_count() == 0);
  CHECK(identity_permutation(3, 2).tensor.ones_count() == 3);
  // corner construction at d=2, k=2, n=3: 3^2 - 2^2
  CHECK(corner_construction(identity_permutation(2, 2), 3).ones == 5);
}

TEST_CASE("get and set round trip") {
  Tensor01 t{Shape({3, 2})};
  t.set({2, 1}, true);
  CHECK(t.get({2, 1}));
  CHECK(t.ones_count() == 1);
  t.set({2, 1}, true);  // idempotent
  CHECK(t.ones_count() == 1);
  t.set({2, 1}, false);
  CHECK(!t.get({2, 1}));
  CHECK(t.ones_count() == 0);
  CHECK_THROWS_AS(t.get({4, 1}), std::out_of_range);
}

TEST_CASE("cross_section") {
  Tensor01 id2 = identity_permutation(2, 2).tensor;
  Tensor01 row = cross_section(id2, 1, 1);
  CHECK(row.get({1}));
  CHECK(!row.get({2}));

  Tensor01 full = Tensor01::full(Shape({2, 2, 2}));
  CHECK(cross_section(full, 3, 2) == Tensor01::full(Shape({2, 2})));

  // single 1 at (2,3) in 3x3, slice axis 2 index 3 -> (0,1,0), against a
  // direct enumeration of the slice
  Tensor01 t = make({3, 3}, {{2, 3}});
  Tensor01 sec = cross_section(t, 2, 3);
  for (int i = 1; i <= 3; ++i) CHECK(sec.get({i}) == t.get({i, 3}));
  CHECK(sec.get({2}));
  CHECK(sec.ones_count() == 1);

  CHECK_THROWS_AS(cross_section(t, 3, 1), std::out_of_range);
  CHECK_THROWS_AS(cross_section(t, 1, 4), std::out_of_range);
}

TEST_CASE("line") {
  Tensor01 zero{Shape({3, 3})};
  CHECK(line(zero, 1, {2}) == std::vector<int>{0, 0, 0});

  Tensor01 id2 = identity_permutation(2, 2).tensor;
  CHECK(line(id2, 1, {2}) == std::vector<int>{0, 1});

  // double permutation from the 2x2x2 identity, tuple along axis 1:
  // hand expansion of the Kronecker definition puts (1,1,0,0) on the
  // axis-1 line over (1,1)
  PatternSpec dbl = block_permutation(identity_permutation(2, 3), {2, 1, 1});
  CHECK(line(dbl.tensor, 1, {1, 1}) == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("kronecker") {
  Tensor01 one = Tensor01::full(Shape({1, 1}));
  Tensor01 id2 = identity_permutation(2, 2).tensor;
  CHECK(kronecker(one, id2) == id2);

  Tensor01 r12 = Tensor01::full(Shape({1, 2}));
  Tensor01 prod = kronecker(id2, r12);
  CHECK(prod == make({2, 4}, {{1, 1}, {1, 2}, {2, 3}, {2, 4}}));

  CHECK_THROWS_AS(kronecker(id2, Tensor01::full(Shape({2}))), std::invalid_argument);
}

TEST_CASE("kronecker ones count on random pairs") {
  auto rng = make_rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    Tensor01 m{Shape({3, 3})}, n{Shape({3, 3})};
    for (std::uint64_t i = 0; i < 9; ++i) {
      if (rng() % 2) m.set_at(i, true);
      if (rng() % 2) n.set_at(i, true);
    }
    Tensor01 prod = kronecker(m, n);
    CHECK(prod.ones_count() == m.ones_count() * n.ones_count());
    // spot check against the blockwise definition
    for (const Coord& c : prod.ones()) {
      Coord mc = {(c[0] - 1) / 3 + 1, (c[1] - 1) / 3 + 1};
      Coord nc = {(c[0] - 1) % 3 + 1, (c[1] - 1) % 3 + 1};
      CHECK(m.get(mc));
      CHECK(n.get(nc));
    }
  }
}

TEST_CASE("contract_axis") {
  Tensor01 r22 = Tensor01::full(Shape({2, 2}));
  Tensor01 c = contract_axis(contract_axis(r22, 1, {2}), 2, {2});
  CHECK(c == Tensor01::full(Shape({1, 1})));

  Tensor01 id2 = identity_permutation(2, 2).tensor;
  CHECK(contract_axis(id2, 1, {2}) == Tensor01::full(Shape({1, 2})));

  Tensor01 id4 = identity_permutation(4, 2).tensor;
  Tensor01 contracted = contract_axis(contract_axis(id4, 1, {2, 2}), 2, {2, 2});
  CHECK(contracted == identity_permutation(2, 2).tensor);

  CHECK_THROWS_AS(contract_axis(id4, 1, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(contract_axis(id4, 1, {4, 0}), std::invalid_argument);
}

TEST_CASE("block_contraction") {
  CHECK(block_contraction(Tensor01{Shape({4, 4})}, 2) == Tensor01{Shape({2, 2})});
  CHECK(block_contraction(make({4, 4}, {{3, 4}}), 2) == make({2, 2}, {{2, 2}}));
  CHECK(block_contraction(identity_permutation(4, 2).tensor, 2) ==
        identity_permutation(2, 2).tensor);
  CHECK_THROWS_AS(block_contraction(Tensor01{Shape({4, 3})}, 2), std::invalid_argument);
}

TEST_CASE("j_remainder") {
  CHECK(j_remainder(Tensor01{Shape({2, 2, 2})}, 2) == Tensor01{Shape({2, 2})});
  CHECK(j_remainder(identity_permutation(2, 3).tensor, 3) ==
        identity_permutation(2, 2).tensor);
  CHECK_THROWS_AS(j_remainder(Tensor01{Shape({3})}, 1), std::invalid_argument);

  // remainder of a double permutation on a non-tuple axis is the
  // (d-1)-dimensional double permutation (k=2, d=3, tuple on axis 1)
  PatternSpec dbl3 = block_permutation(identity_permutation(2, 3), {2, 1, 1});
  PatternSpec dbl2 = block_permutation(identity_permutation(2, 2), {2, 1});
  CHECK(j_remainder(dbl3.tensor, 3) == dbl2.tensor);
}
