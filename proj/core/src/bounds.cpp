#include "matex/bounds.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "matex/containment.hpp"
#include "matex/extremal.hpp"

namespace matex {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_cubic(const Tensor01& t, int* edge) {
  const auto& dims = t.shape().dims();
  for (int n : dims)
    if (n != dims[0]) return false;
  if (edge) *edge = dims[0];
  return true;
}

bool is_identity(const PatternSpec& p) {
  int k = 0;
  if (p.kind != PatternKind::permutation || !is_cubic(p.tensor, &k)) return false;
  for (const Coord& c : p.tensor.ones())
    for (int v : c)
      if (v != c[0]) return false;
  return true;
}

bool find_corner_one(const Tensor01& t, Coord* where) {
  const auto& dims = t.shape().dims();
  for (const Coord& c : t.ones()) {
    bool corner = true;
    for (int l = 0; l < t.dim(); ++l)
      if (c[l] != 1 && c[l] != dims[l]) corner = false;
    if (corner) {
      if (where) *where = c;
      return true;
    }
  }
  return false;
}

bool has_corner_one(const Tensor01& t) { return find_corner_one(t, nullptr); }

// reflect the marked axes: i -> extent + 1 - i; preserves avoidance counts
Tensor01 reflect_axes(const Tensor01& t, const std::vector<bool>& flip) {
  const auto& dims = t.shape().dims();
  Tensor01 out{t.shape()};
  for (Coord c : t.ones()) {
    for (int l = 0; l < t.dim(); ++l)
      if (flip[l]) c[l] = dims[l] + 1 - c[l];
    out.set(c, true);
  }
  return out;
}

// move a corner 1-entry to (1,...,1); the multiplier argument needs it there
PatternSpec normalize_corner(const PatternSpec& p) {
  Coord corner;
  if (!find_corner_one(p.tensor, &corner))
    throw std::invalid_argument("pattern has no corner 1-entry");
  std::vector<bool> flip(p.tensor.dim(), false);
  bool any = false;
  for (int l = 0; l < p.tensor.dim(); ++l)
    if (corner[l] != 1) flip[l] = true, any = true;
  if (!any) return p;
  return classify_pattern(reflect_axes(p.tensor, flip));
}

SolveResult solve_f(const PatternSpec& p, int n, int d, double budget) {
  SolveTask task;
  task.shape = Shape(std::vector<int>(d, n));
  task.pattern = p;
  task.budget_seconds = budget;
  return solve(task);
}

}  // namespace

ExponentProfile exponents(const std::vector<int>& k_vec) {
  if (k_vec.empty()) throw std::invalid_argument("exponents: empty k_vec");
  long long prod = 1, sum = 0, mx = 0;
  int above_one = 0;
  for (int k : k_vec) {
    if (k < 1) throw std::invalid_argument("exponents: entries must be positive");
    prod *= k;
    sum += k;
    mx = std::max<long long>(mx, k);
    if (k > 1) ++above_one;
  }
  if (prod == 1) throw std::invalid_argument("exponents: all-ones k_vec has no deficit");
  ExponentProfile e;
  e.k_vec = k_vec;
  e.alpha = Rational(mx, prod);
  e.beta = Rational(sum - static_cast<long long>(k_vec.size()), prod - 1);
  e.regime = above_one == 1 ? Regime::tuple : Regime::strict;
  return e;
}

BoundReport bound_report(const PatternSpec& p, int n, int d) {
  BoundReport rep;
  rep.kind = p.kind;
  const long long ones = p.tensor.ones_count();

  if (ones >= 2)
    rep.lines.push_back({"n^" + std::to_string(d - 1) + " <= f(n,P,d) <= n^" +
                             std::to_string(d),
                         "formula"});

  int k = 0;
  switch (p.kind) {
    case PatternKind::permutation:
      if (is_cubic(p.tensor, &k)) {
        long long corner = ipow(n, d) - ipow(n - k + 1, d);
        rep.lines.push_back({"f(n,P,d) >= n^d - (n-k+1)^d = " + std::to_string(corner),
                             "formula"});
        if (is_identity(p)) {
          rep.has_exact = true;
          rep.exact_value = corner;
          rep.lines.push_back({"identity pattern: f(n,P,d) = n^d - (n-k+1)^d = " +
                                   std::to_string(corner),
                               "formula"});
          rep.lines.push_back(
              {"liminf f/n^{d-1} = d(k-1) = " + std::to_string((long long)d * (k - 1)),
               "formula"});
        } else {
          rep.lines.push_back({"f(n,P,d) <= C * 2^{O(k)} * n^{d-1}, C symbolic",
                               "symbolic"});
        }
      }
      break;
    case PatternKind::all_ones: {
      ExponentProfile e = exponents(p.k_vec);
      rep.lines.push_back({"C1 * n^{d - " + e.beta.str() + "} <= f(n,R,d), C1 symbolic",
                           "symbolic"});
      rep.lines.push_back({"f(n,R,d) <= C2 * n^{d - " + e.alpha.str() + "}, C2 symbolic",
                           "symbolic"});
      break;
    }
    case PatternKind::tuple_permutation:
      rep.lines.push_back({"f(n,P,d) = Theta(n^{d-1}), constants symbolic", "symbolic"});
      break;
    case PatternKind::block_permutation: {
      ExponentProfile e = exponents(p.k_vec);
      rep.lines.push_back({"C1 * n^{d - " + e.beta.str() +
                               "} <= f(n, P (x) R, d), C1 symbolic",
                           "symbolic"});
      break;
    }
    case PatternKind::custom:
      break;
  }
  return rep;
}

std::string BoundReport::to_json() const {
  nlohmann::json j;
  j["kind"] = pattern_kind_name(kind);
  auto arr = nlohmann::json::array();
  for (const auto& l : lines)
    arr.push_back({{"bound", l.description}, {"provenance", l.provenance}});
  j["bounds"] = std::move(arr);
  if (has_exact) {
    j["exact"] = exact_value;
    j["exact_provenance"] = "formula";
  }
  return j.dump();
}

LimitEstimate limit_sequence(const PatternSpec& p, int d, int n_max, double budget_seconds) {
  if (n_max < 1) throw std::invalid_argument("limit_sequence: n_max must be positive");
  LimitEstimate est;
  int k = 0;
  if (p.kind == PatternKind::permutation && is_cubic(p.tensor, &k)) {
    est.has_dk_floor = true;
    est.dk_floor = static_cast<long long>(d) * (k - 1);
  }
  for (int n = 1; n <= n_max; ++n) {
    SolveResult r = solve_f(p, n, d, budget_seconds);
    if (!r.proved_optimal) {
      est.omitted.push_back(n);
      continue;
    }
    est.samples.push_back({n, r.optimum, Rational(r.optimum, ipow(n, d - 1))});
  }
  for (std::size_t i = 1; i < est.samples.size(); ++i)
    if (est.samples[i].ratio < est.samples[i - 1].ratio) est.nondecreasing = false;
  return est;
}

std::string LimitEstimate::to_json() const {
  nlohmann::json j;
  auto arr = nlohmann::json::array();
  for (const auto& s : samples)
    arr.push_back({{"n", s.n},
                   {"f", s.f},
                   {"ratio", s.ratio.str()},
                   {"ratio_float", s.ratio.value()},
                   {"provenance", "exact-solver"}});
  j["samples"] = std::move(arr);
  j["omitted"] = omitted;
  if (has_dk_floor) {
    j["dk_floor"] = dk_floor;
    j["dk_floor_note"] = "asymptotic bound, not per-n";
  }
  j["nondecreasing"] = nondecreasing;
  return j.dump();
}

HomogeneityVerdict check_super_homogeneity(const PatternSpec& p, int n, int s,
                                           double budget_seconds) {
  if (!has_corner_one(p.tensor))
    throw std::invalid_argument("check_super_homogeneity: pattern has no corner 1-entry");
  if (s < 1) throw std::invalid_argument("check_super_homogeneity: s must be positive");
  const PatternSpec q = normalize_corner(p);
  const int d = q.tensor.dim();

  HomogeneityVerdict v;
  v.n = n;
  v.s = s;
  // the budget applies to the large instance; the base is desk-scale by design
  SolveResult base = solve_f(q, n, d, 0.0);
  if (!base.proved_optimal)
    throw std::invalid_argument("check_super_homogeneity: f(n) not certified at this budget");
  v.f_n = base.optimum;

  Tensor01 m = antidiagonal_multiplier(s, d);
  Tensor01 product = kronecker(m, base.witness);
  v.kron_avoids = !contains(product, q.tensor);
  v.rhs = Rational(ipow(s, d - 1) * base.optimum, factorial(d - 1));

  std::uint64_t cells = 1;
  for (int l = 0; l < d; ++l) cells *= static_cast<std::uint64_t>(s) * n;
  if (cells <= (std::uint64_t{1} << 20)) {
    SolveResult big = solve_f(q, s * n, d, budget_seconds);
    if (big.proved_optimal) {
      v.inequality_evaluable = true;
      v.f_sn = big.optimum;
      v.inequality_holds = !(Rational(big.optimum) < v.rhs);
    }
  }
  return v;
}

std::string HomogeneityVerdict::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["s"] = s;
  j["f_n"] = f_n;
  j["kron_avoids"] = kron_avoids;
  j["rhs"] = rhs.str();
  j["rhs_float"] = rhs.value();
  if (inequality_evaluable) {
    j["f_sn"] = f_sn;
    j["inequality_holds"] = inequality_holds;
    j["provenance"] = "exact-solver";
  } else {
    j["inequality"] = "not evaluable";
  }
  return j.dump();
}

LiminfFloor check_liminf_floor(const PatternSpec& p, int d, int m, double budget_seconds) {
  if (!has_corner_one(p.tensor))
    throw std::invalid_argument("check_liminf_floor: pattern has no corner 1-entry");
  if (m < 1) throw std::invalid_argument("check_liminf_floor: m must be positive");

  LiminfFloor v;
  v.m = m;
  SolveResult r = solve_f(p, m, d, budget_seconds);
  if (!r.proved_optimal)
    throw std::invalid_argument("check_liminf_floor: f(m) not certified at this budget");
  v.f_m = r.optimum;
  v.floor_value = Rational(r.optimum, factorial(d - 1) * ipow(m, d - 1));
  v.best = v.floor_value;

  int k = 0;
  if (p.kind == PatternKind::permutation && is_cubic(p.tensor, &k) && is_identity(p)) {
    v.has_dk_floor = true;
    v.dk_floor = static_cast<long long>(d) * (k - 1);
    if (v.best < Rational(v.dk_floor)) v.best = Rational(v.dk_floor);
  }
  return v;
}

std::string LiminfFloor::to_json() const {
  nlohmann::json j;
  j["m"] = m;
  j["f_m"] = f_m;
  j["floor"] = floor_value.str();
  j["floor_float"] = floor_value.value();
  j["provenance"] = "exact-solver";
  if (has_dk_floor) j["dk_floor"] = dk_floor;
  j["best"] = best.str();
  return j.dump();
}

HeavyRecursionVerdict check_heavy_row_recursion(const std::vector<int>& k_vec, int n,
                                                int t, int s) {
  if (k_vec.empty() || k_vec[0] < 2)
    throw std::invalid_argument("check_heavy_row_recursion: k_vec[0] must be at least 2");

  HeavyRecursionVerdict v;
  std::vector<int> reduced = k_vec;
  reduced[0] -= 1;
  try {
    v.lhs = heavy_row_extremum(k_vec, n, 2 * t, 2 * s);
    v.rhs_a = heavy_row_extremum(k_vec, n, t, 2 * s);
    v.rhs_b = heavy_row_extremum(reduced, n, t, s);
  } catch (const std::exception&) {
    v.evaluable = false;
    return v;
  }
  v.evaluable = true;
  v.holds = v.lhs <= 2 * v.rhs_a + 2 * v.rhs_b;
  return v;
}

std::string HeavyRecursionVerdict::to_json() const {
  nlohmann::json j;
  if (!evaluable) {
    j["verdict"] = "not evaluable";
    return j.dump();
  }
  j["lhs"] = lhs;
  j["rhs_a"] = rhs_a;
  j["rhs_b"] = rhs_b;
  j["holds"] = holds;
  j["provenance"] = "exact-solver";
  return j.dump();
}

}  // namespace matex
