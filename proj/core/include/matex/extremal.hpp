#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matex/patterns.hpp"
#include "matex/tensor.hpp"

namespace matex {

enum class Predicate { containment, interval_minor };
enum class Objective { total_ones, heavy_rows };

std::string predicate_name(Predicate p);
std::string objective_name(Objective o);

struct SolveTask {
  Shape shape;
  PatternSpec pattern;
  Predicate predicate = Predicate::containment;
  Objective objective = Objective::total_ones;
  int heavy_threshold = 1;      // s, heavy_rows only
  double budget_seconds = 0.0;  // 0 = unlimited
  bool canonical_witness = true;
};

struct SolveResult {
  long long optimum = 0;
  Tensor01 witness;
  bool proved_optimal = false;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;
};

// Exact branch and bound: depth-first over cells in lexicographic order,
// branching 1-then-0, with incremental legality checks and the
// value-plus-remaining bound. The returned witness is re-verified and, when
// the search completed, canonicalized to the lexicographically least optimum.
SolveResult solve(const SolveTask& task);

// Constructive incumbent: ones on a single cross section (n^{d-1} ones), or
// the corner construction when the pattern is a permutation on a cubic shape.
Tensor01 lower_bound_seed(const SolveTask& task);

// Number of axis-1 lines with at least s ones.
long long heavy_row_count(const Tensor01& a, int s);

struct FamilyResult {
  long long optimum = 0;
  std::size_t argmax = 0;
  std::vector<SolveResult> members;
  bool all_proved = false;
};

FamilyResult solve_family_max(const std::vector<PatternSpec>& family, const Shape& shape,
                              Predicate predicate, Objective objective, int heavy_s = 1,
                              double budget_seconds = 0.0, int threads = 1);

// F(n,j,k,d): max of f(n,M,d) over all j-tuple permutation matrices M
// generated by k x ... x k permutation matrices (j = 1 gives the plain
// permutation family). Throws if any member solve is not proved optimal.
long long tuple_family_extremum(int n, int j, int k, int d, int threads = 1);

// f_{k_vec}(n, t, s, d): max number of axis-1 lines with >= s ones in a
// t x n x ... x n matrix avoiding R^{k_vec} as an interval minor.
long long heavy_row_extremum(const std::vector<int>& k_vec, int n, int t, int s);

}  // namespace matex
