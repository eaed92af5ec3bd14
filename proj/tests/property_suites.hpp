// Randomized invariant suites shared by the property runner and the
// acceptance gate. Each returns exact case/failure counts under fixed seeds.
#pragma once

#include <string>
#include <vector>

#include "matex/bounds.hpp"
#include "matex/containment.hpp"
#include "matex/extremal.hpp"
#include "matex/patterns.hpp"
#include "matex/rng.hpp"

namespace suites {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  bool ok() const { return cases > 0 && failures == 0; }
};

inline matex::Tensor01 random_tensor(const matex::Shape& shape, int denom,
                                     std::mt19937_64& rng) {
  matex::Tensor01 t{shape};
  for (std::uint64_t i = 0; i < shape.cells(); ++i)
    if (rng() % denom == 0) t.set_at(i, true);
  return t;
}

inline matex::Tensor01 reverse_axis(const matex::Tensor01& t, int axis) {
  matex::Tensor01 out{t.shape()};
  const int n = t.shape().extent(axis);
  for (matex::Coord c : t.ones()) {
    c[axis - 1] = n + 1 - c[axis - 1];
    out.set(c, true);
  }
  return out;
}

// adding ones never destroys containment; clearing never creates it
inline SuiteResult suite_monotonicity() {
  SuiteResult r{"monotonicity"};
  auto rng = matex::make_rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    matex::Tensor01 p = matex::random_permutation(2, 2, rng()).tensor;
    matex::Tensor01 a = random_tensor(matex::Shape({4, 4}), 2, rng);
    matex::Tensor01 bigger = a;
    matex::Tensor01 smaller = a;
    std::uint64_t cell = rng() % 16;
    bigger.set_at(cell, true);
    smaller.set_at(cell, false);
    ++r.cases;
    const bool base = matex::contains(a, p);
    if (base && !matex::contains(bigger, p)) ++r.failures;
    if (!base && matex::contains(smaller, p)) ++r.failures;
  }
  return r;
}

// reversing any axis of both host and pattern preserves containment
inline SuiteResult suite_reversal() {
  SuiteResult r{"reversal symmetry"};
  auto rng = matex::make_rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    matex::Tensor01 p = matex::random_permutation(2, d, rng()).tensor;
    matex::Shape shape(std::vector<int>(d, d == 2 ? 5 : 3));
    matex::Tensor01 a = random_tensor(shape, 3, rng);
    const int axis = 1 + static_cast<int>(rng() % d);
    ++r.cases;
    if (matex::contains(a, p) !=
        matex::contains(reverse_axis(a, axis), reverse_axis(p, axis)))
      ++r.failures;
  }
  return r;
}

// the incremental solver check agrees with a from-scratch recheck
inline SuiteResult suite_would_create() {
  SuiteResult r{"would_create_copy = full recheck"};
  auto rng = matex::make_rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    matex::Tensor01 p = matex::random_permutation(2, 2, rng()).tensor;
    matex::Tensor01 a =
        matex::random_avoiding_matrix(matex::Shape({4, 4}), p, 0.35, rng());
    matex::Coord c = matex::first_coord(a.shape());
    do {
      if (a.get(c)) continue;
      matex::Tensor01 plus = a;
      plus.set(c, true);
      ++r.cases;
      if (matex::would_create_copy(a, p, c) != matex::contains(plus, p)) ++r.failures;
    } while (matex::next_coord(c, a.shape()));
  }
  return r;
}

// n^{d-1} <= f <= n^d on every solved instance with a >= 2-ones pattern
inline SuiteResult suite_sandwich() {
  SuiteResult r{"n^{d-1} <= f <= n^d"};
  auto rng = matex::make_rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2;
    const int n = 2 + static_cast<int>(rng() % 3);
    const int k = 2 + static_cast<int>(rng() % 2);
    matex::SolveTask t;
    t.shape = matex::Shape(std::vector<int>(d, n));
    t.pattern = matex::random_permutation(k, d, rng());
    matex::SolveResult res = matex::solve(t);
    ++r.cases;
    long long lo = 1, hi = 1;
    for (int l = 0; l < d - 1; ++l) lo *= n;
    for (int l = 0; l < d; ++l) hi *= n;
    if (!res.proved_optimal || res.optimum < lo || res.optimum > hi) ++r.failures;
  }
  return r;
}

// tuple regime iff alpha = beta = 1; otherwise 0 < alpha < beta < 1;
// exhaustive over entries <= 4, d <= 4
inline SuiteResult suite_regimes() {
  SuiteResult r{"exponent regimes"};
  for (int d = 1; d <= 4; ++d) {
    std::vector<int> k(d, 1);
    for (;;) {
      long long prod = 1;
      for (int v : k) prod *= v;
      if (prod > 1) {
        ++r.cases;
        matex::ExponentProfile e = matex::exponents(k);
        const bool tuple_alg = e.regime == matex::Regime::tuple;
        const bool tuple_math = e.alpha == matex::Rational(1) && e.beta == matex::Rational(1);
        bool ok = tuple_alg == tuple_math;
        if (!tuple_alg)
          ok = ok && matex::Rational(0) < e.alpha && e.alpha < e.beta &&
               e.beta < matex::Rational(1);
        if (!ok) ++r.failures;
      }
      int i = d - 1;
      while (i >= 0 && k[i] == 4) k[i--] = 1;
      if (i < 0) break;
      ++k[i];
    }
  }
  return r;
}

inline std::vector<SuiteResult> run_all() {
  return {suite_monotonicity(), suite_reversal(), suite_would_create(), suite_sandwich(),
          suite_regimes()};
}

}  // namespace suites
