#include "doctest.h"

#include <stdexcept>

#include "matex/containment.hpp"
#include "matex/extremal.hpp"
#include "matex/patterns.hpp"
#include "oracles.hpp"

using namespace matex;
using oracles::make;

namespace {

SolveTask ones_task(const PatternSpec& p, int n, int d) {
  SolveTask t;
  t.shape = Shape(std::vector<int>(d, n));
  t.pattern = p;
  return t;
}

}  // namespace

TEST_CASE("solve basics") {
  // a single-1 pattern forbids every 1
  PatternSpec dot = classify_pattern(make({1, 1}, {{1, 1}}));
  SolveResult r = solve(ones_task(dot, 3, 2));
  CHECK(r.optimum == 0);
  CHECK(r.proved_optimal);

  CHECK_THROWS_AS(solve(ones_task(classify_pattern(Tensor01{Shape({2, 2})}), 3, 2)),
                  std::invalid_argument);
}

TEST_CASE("identity exact values d=2 k=2") {
  PatternSpec id = identity_permutation(2, 2);
  for (int n = 3; n <= 5; ++n) {
    SolveResult r = solve(ones_task(id, n, 2));
    CHECK(r.proved_optimal);
    CHECK(r.optimum == n * n - (n - 1) * (n - 1));
  }
}

TEST_CASE("zarankiewicz values vs exhaustive oracle") {
  PatternSpec r22 = all_ones({2, 2});
  for (int n = 2; n <= 3; ++n) {
    SolveResult r = solve(ones_task(r22, n, 2));
    CHECK(r.proved_optimal);
    long long oracle = oracles::max_ones(Shape({n, n}), [&](const Tensor01& t) {
      return !oracles::contains(t, r22.tensor);
    });
    CHECK(r.optimum == oracle);
  }
}

TEST_CASE("witness properties") {
  PatternSpec id = identity_permutation(2, 2);
  SolveResult r = solve(ones_task(id, 4, 2));
  CHECK(r.witness.ones_count() == r.optimum);
  CHECK(!contains(r.witness, id.tensor));

  // canonical witness is deterministic
  SolveResult again = solve(ones_task(id, 4, 2));
  CHECK(again.witness == r.witness);
}

TEST_CASE("budget exhaustion is flagged") {
  SolveTask t = ones_task(identity_permutation(3, 2), 6, 2);
  t.budget_seconds = 1e-9;
  SolveResult r = solve(t);
  CHECK(!r.proved_optimal);
  // the partial answer still verifies
  CHECK(!contains(r.witness, t.pattern.tensor));
  CHECK(r.witness.ones_count() == r.optimum);
}

TEST_CASE("lower_bound_seed") {
  PatternSpec r22 = all_ones({2, 2});
  Tensor01 seed = lower_bound_seed(ones_task(r22, 3, 2));
  CHECK(seed.ones_count() >= 3);
  CHECK(!contains(seed, r22.tensor));

  PatternSpec id = identity_permutation(2, 2);
  Tensor01 corner = lower_bound_seed(ones_task(id, 4, 2));
  CHECK(corner.ones_count() == 7);
  CHECK(!contains(corner, id.tensor));

  CHECK_THROWS_AS(lower_bound_seed(ones_task(classify_pattern(make({1, 1}, {{1, 1}})), 3, 2)),
                  std::invalid_argument);
}

TEST_CASE("heavy_row_count") {
  CHECK(heavy_row_count(Tensor01{Shape({3, 3})}, 1) == 0);
  CHECK(heavy_row_count(Tensor01::full(Shape({2, 3})), 2) == 3);
  Tensor01 t = make({4, 3}, {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {2, 2}, {1, 3}});
  CHECK(heavy_row_count(t, 2) == 2);  // column counts 4, 2, 1
}

TEST_CASE("solve_family_max and F(n,j,k,d)") {
  auto fam = tuple_permutation_family(1, 2, 2);
  FamilyResult fr = solve_family_max(fam, Shape({3, 3}), Predicate::containment,
                                     Objective::total_ones);
  CHECK(fr.all_proved);
  CHECK(fr.optimum == 5);  // both members give 5 by reversal symmetry
  for (const auto& m : fr.members) CHECK(m.optimum == 5);

  CHECK(tuple_family_extremum(3, 1, 2, 2) == 5);

  // single-member family equals a plain solve
  FamilyResult one = solve_family_max({fam[0]}, Shape({3, 3}), Predicate::containment,
                                      Objective::total_ones);
  CHECK(one.optimum == solve(ones_task(fam[0], 3, 2)).optimum);

  // threads do not change the value
  FamilyResult fr2 = solve_family_max(tuple_permutation_family(2, 2, 2), Shape({3, 3}),
                                      Predicate::containment, Objective::total_ones, 1,
                                      0.0, 4);
  FamilyResult fr1 = solve_family_max(tuple_permutation_family(2, 2, 2), Shape({3, 3}),
                                      Predicate::containment, Objective::total_ones);
  CHECK(fr2.optimum == fr1.optimum);
}

TEST_CASE("m(n, R^{2,2}, 2) via the interval-minor predicate") {
  PatternSpec r22 = all_ones({2, 2});
  for (int n = 2; n <= 3; ++n) {
    SolveTask t = ones_task(r22, n, 2);
    t.predicate = Predicate::interval_minor;
    SolveResult r = solve(t);
    CHECK(r.proved_optimal);
    long long oracle = oracles::max_ones(Shape({n, n}), [&](const Tensor01& a) {
      return !oracles::contains_interval_minor(a, r22.tensor);
    });
    CHECK(r.optimum == oracle);
  }
}

TEST_CASE("heavy_row_extremum") {
  CHECK(heavy_row_extremum({2, 2}, 2, 1, 2) == 0);  // s > t
  long long v = heavy_row_extremum({2, 2}, 2, 2, 1);
  CHECK(v >= 0);
  CHECK(v <= 2);  // at most n^{d-1} lines exist
  CHECK_THROWS_AS(heavy_row_extremum({2, 2}, 0, 1, 1), std::invalid_argument);
}
