#pragma once

#include <string>
#include <vector>

#include "matex/patterns.hpp"
#include "matex/rational.hpp"
#include "matex/tensor.hpp"

namespace matex {

enum class Regime { tuple, strict };

struct ExponentProfile {
  std::vector<int> k_vec;
  Rational alpha;  // max(k) / prod(k)
  Rational beta;   // (sum(k) - d) / (prod(k) - 1)
  Regime regime = Regime::strict;
};

// Exact rational exponent deficits for R^{k_vec}. Throws when every entry is 1.
ExponentProfile exponents(const std::vector<int>& k_vec);

struct BoundLine {
  std::string description;
  std::string provenance;  // "exact-solver" | "formula" | "measured" | "symbolic"
};

struct BoundReport {
  PatternKind kind = PatternKind::custom;
  std::vector<BoundLine> lines;
  bool has_exact = false;
  long long exact_value = 0;
  std::string to_json() const;
};

// Applicable closed-form and asymptotic bounds for f(n,P,d), constants kept
// symbolic; the exact identity value is attached for identity patterns.
BoundReport bound_report(const PatternSpec& p, int n, int d);

struct LimitSample {
  int n = 1;
  long long f = 0;
  Rational ratio;  // f / n^{d-1}
};

struct LimitEstimate {
  std::vector<LimitSample> samples;   // proved-optimal values only
  std::vector<int> omitted;           // n values with no certified optimum
  bool has_dk_floor = false;
  long long dk_floor = 0;             // d(k-1), cubic patterns; asymptotic, not per-n
  bool nondecreasing = true;
  std::string to_json() const;
};

LimitEstimate limit_sequence(const PatternSpec& p, int d, int n_max,
                             double budget_seconds = 0.0);

struct HomogeneityVerdict {
  int n = 0, s = 0;
  long long f_n = 0;
  bool kron_avoids = false;      // antidiagonal multiplier (x) witness avoids P
  bool inequality_evaluable = false;
  bool inequality_holds = false;
  long long f_sn = 0;
  Rational rhs;                  // s^{d-1}/(d-1)! * f(n)
  std::string to_json() const;
};

// Requires a 1-entry of P at a corner of its index box.
HomogeneityVerdict check_super_homogeneity(const PatternSpec& p, int n, int s,
                                           double budget_seconds = 0.0);

struct LiminfFloor {
  int m = 1;
  long long f_m = 0;
  Rational floor_value;      // 1/(d-1)! * f(m)/m^{d-1}
  bool has_dk_floor = false;
  long long dk_floor = 0;
  Rational best;             // max of the two certified floors
  std::string to_json() const;
};

LiminfFloor check_liminf_floor(const PatternSpec& p, int d, int m,
                               double budget_seconds = 0.0);

struct HeavyRecursionVerdict {
  bool evaluable = false;
  bool holds = false;
  long long lhs = 0;      // f_{k}(n, 2t, 2s)
  long long rhs_a = 0;    // f_{k}(n, t, 2s)
  long long rhs_b = 0;    // f_{k1-1,...}(n, t, s)
  std::string to_json() const;
};

// Verifies f_k(n,2t,2s) <= 2 f_k(n,t,2s) + 2 f_{k1-1,...}(n,t,s) on exact
// values. Throws when k_vec[0] < 2.
HeavyRecursionVerdict check_heavy_row_recursion(const std::vector<int>& k_vec, int n,
                                                int t, int s);

}  // namespace matex
