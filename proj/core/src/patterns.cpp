#include "matex/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "matex/containment.hpp"
#include "matex/json_io.hpp"
#include "matex/rng.hpp"

namespace matex {

std::string pattern_kind_name(PatternKind k) {
  switch (k) {
    case PatternKind::permutation: return "permutation";
    case PatternKind::all_ones: return "all_ones";
    case PatternKind::block_permutation: return "block_permutation";
    case PatternKind::tuple_permutation: return "tuple_permutation";
    case PatternKind::custom: return "custom";
  }
  return "custom";
}

std::uint64_t PatternSpec::canonical_hash() const {
  return fnv1a64(tensor_to_json(tensor));
}

bool is_permutation(const Tensor01& t) {
  const int d = t.dim();
  std::vector<std::vector<long long>> counts(d);
  for (int l = 0; l < d; ++l) counts[l].assign(t.shape().dims()[l], 0);
  for (const Coord& c : t.ones())
    for (int l = 0; l < d; ++l) counts[l][c[l] - 1] += 1;
  for (int l = 0; l < d; ++l)
    for (long long cnt : counts[l])
      if (cnt != 1) return false;
  return t.ones_count() > 0;
}

namespace {

PatternSpec make_spec(Tensor01 t, PatternKind kind, std::string provenance) {
  PatternSpec s;
  s.tensor = std::move(t);
  s.kind = kind;
  s.provenance = std::move(provenance);
  return s;
}

bool is_kron_of(const Tensor01& t, const Tensor01& perm, const std::vector<int>& r_vec) {
  Tensor01 rebuilt = kronecker(perm, Tensor01::full(Shape(r_vec)));
  return rebuilt == t;
}

}  // namespace

PatternSpec classify_pattern(const Tensor01& t) {
  const int d = t.dim();
  if (is_permutation(t)) {
    PatternSpec s = make_spec(t, PatternKind::permutation, "classified");
    s.k_vec.assign(d, 1);
    return s;
  }
  if (t.ones_count() == static_cast<long long>(t.cells())) {
    PatternSpec s = make_spec(t, PatternKind::all_ones, "classified");
    s.k_vec = t.shape().dims();
    return s;
  }
  // Try P (k x ... x k permutation) times all-ones blocks, largest k first.
  int kmax = *std::min_element(t.shape().dims().begin(), t.shape().dims().end());
  for (int k = kmax; k >= 2; --k) {
    bool divides = true;
    for (int n : t.shape().dims())
      if (n % k != 0) divides = false;
    if (!divides) continue;
    std::vector<int> r_vec(d);
    for (int l = 0; l < d; ++l) r_vec[l] = t.shape().dims()[l] / k;
    Tensor01 perm = t;
    for (int l = 1; l <= d; ++l) {
      std::vector<int> groups(k, r_vec[l - 1]);
      perm = contract_axis(perm, l, groups);
    }
    if (!is_permutation(perm) || !is_kron_of(t, perm, r_vec)) continue;
    int big_axes = 0, tuple_axis = 0, arity = 0;
    for (int l = 0; l < d; ++l)
      if (r_vec[l] > 1) {
        ++big_axes;
        tuple_axis = l + 1;
        arity = r_vec[l];
      }
    PatternSpec s = make_spec(t,
                              big_axes == 1 ? PatternKind::tuple_permutation
                                            : PatternKind::block_permutation,
                              "classified");
    s.k_vec = r_vec;
    if (big_axes == 1) {
      s.tuple_axis = tuple_axis;
      s.tuple_arity = arity;
    }
    return s;
  }
  return make_spec(t, PatternKind::custom, "classified");
}

PatternSpec identity_permutation(int k, int d) {
  if (k < 1 || d < 1) throw std::invalid_argument("identity_permutation: k, d >= 1");
  Tensor01 t{Shape(std::vector<int>(d, k))};
  for (int i = 1; i <= k; ++i) t.set(Coord(d, i), true);
  PatternSpec s = make_spec(std::move(t), PatternKind::permutation, "identity");
  s.k_vec.assign(d, 1);
  return s;
}

PatternSpec permutation_from_maps(int k, const std::vector<std::vector<int>>& maps) {
  if (k < 1) throw std::invalid_argument("permutation_from_maps: k >= 1");
  const int d = static_cast<int>(maps.size()) + 1;
  if (d > kMaxDim) throw std::invalid_argument("permutation_from_maps: too many axes");
  for (const auto& m : maps) {
    if (static_cast<int>(m.size()) != k)
      throw std::invalid_argument("permutation_from_maps: map has wrong length");
    std::vector<bool> seen(k + 1, false);
    for (int v : m) {
      if (v < 1 || v > k || seen[v])
        throw std::invalid_argument("permutation_from_maps: map is not a bijection");
      seen[v] = true;
    }
  }
  Tensor01 t{Shape(std::vector<int>(d, k))};
  Coord c(d);
  for (int i = 1; i <= k; ++i) {
    c[0] = i;
    for (int l = 1; l < d; ++l) c[l] = maps[l - 1][i - 1];
    t.set(c, true);
  }
  PatternSpec s = make_spec(std::move(t), PatternKind::permutation, "from_maps");
  s.k_vec.assign(d, 1);
  return s;
}

PatternSpec random_permutation(int k, int d, std::uint64_t seed) {
  if (k < 1 || d < 1) throw std::invalid_argument("random_permutation: k, d >= 1");
  std::vector<std::vector<int>> maps(d - 1);
  for (int l = 0; l < d - 1; ++l) {
    maps[l].resize(k);
    std::iota(maps[l].begin(), maps[l].end(), 1);
    auto rng = make_rng(split_seed(seed, static_cast<std::uint64_t>(l) + 1));
    std::shuffle(maps[l].begin(), maps[l].end(), rng);
  }
  PatternSpec s = permutation_from_maps(k, maps);
  s.provenance = "random(seed=" + std::to_string(seed) + ")";
  return s;
}

PatternSpec random_permutation_with_corner(int k, int d, std::uint64_t seed) {
  PatternSpec s = random_permutation(k, d, seed);
  if (k == 1) return s;
  auto rng = make_rng(split_seed(seed, 0xc0));
  // pick a corner and swap map values so the 1-entry in that first cross
  // section lands on it
  const int i1 = (rng() & 1) ? 1 : k;
  auto onesv = s.tensor.ones();
  Coord cur;
  for (const Coord& c : onesv)
    if (c[0] == i1) cur = c;
  Coord corner(d);
  corner[0] = i1;
  for (int l = 1; l < d; ++l) corner[l] = (rng() & 1) ? 1 : k;
  Tensor01 t = s.tensor;
  for (int l = 1; l < d; ++l) {
    if (cur[l] == corner[l]) continue;
    // swap coordinates cur[l] and corner[l] along axis l+1
    std::vector<Coord> cells = t.ones();
    for (const Coord& c : cells) t.set(c, false);
    for (Coord c : cells) {
      if (c[l] == cur[l]) c[l] = corner[l];
      else if (c[l] == corner[l]) c[l] = cur[l];
      t.set(c, true);
    }
    cur[l] = corner[l];
  }
  s.tensor = std::move(t);
  s.provenance = "random_corner(seed=" + std::to_string(seed) + ")";
  return s;
}

PatternSpec all_ones(const std::vector<int>& k_vec) {
  for (int k : k_vec)
    if (k < 1) throw std::invalid_argument("all_ones: extents must be positive");
  PatternSpec s = make_spec(Tensor01::full(Shape(k_vec)), PatternKind::all_ones, "all_ones");
  s.k_vec = k_vec;
  return s;
}

PatternSpec block_permutation(const PatternSpec& p, const std::vector<int>& k_vec) {
  if (p.kind != PatternKind::permutation)
    throw std::invalid_argument("block_permutation: generator must be a permutation matrix");
  if (static_cast<int>(k_vec.size()) != p.tensor.dim())
    throw std::invalid_argument("block_permutation: k_vec length must match dimension");
  Tensor01 t = kronecker(p.tensor, Tensor01::full(Shape(k_vec)));
  int big_axes = 0, tuple_axis = 0, arity = 0;
  for (int l = 0; l < static_cast<int>(k_vec.size()); ++l)
    if (k_vec[l] > 1) {
      ++big_axes;
      tuple_axis = l + 1;
      arity = k_vec[l];
    }
  PatternKind kind = big_axes == 0 ? PatternKind::permutation
                     : big_axes == 1 ? PatternKind::tuple_permutation
                                     : PatternKind::block_permutation;
  PatternSpec s = make_spec(std::move(t), kind, "block(" + p.provenance + ")");
  s.k_vec = k_vec;
  if (big_axes == 1) {
    s.tuple_axis = tuple_axis;
    s.tuple_arity = arity;
  }
  return s;
}

namespace {

void enumerate_generators(int k, int d, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<int> base(k);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<int>> maps(d - 1);
  std::vector<std::size_t> idx(d - 1, 0);
  while (true) {
    for (int l = 0; l < d - 1; ++l) maps[l] = perms[idx[l]];
    out.push_back(maps);
    int l = d - 2;
    while (l >= 0 && ++idx[l] == perms.size()) idx[l--] = 0;
    if (l < 0) break;
  }
}

}  // namespace

std::vector<PatternSpec> tuple_permutation_family(int j, int k, int d) {
  if (j < 1 || k < 1 || d < 1)
    throw std::invalid_argument("tuple_permutation_family: j, k, d >= 1");
  double count = 1;
  for (int i = 2; i <= k; ++i) count *= i;
  count = std::pow(count, d - 1);
  if (count > 5000)
    throw std::invalid_argument("tuple_permutation_family: generator family too large; supply an explicit family file");

  std::vector<std::vector<std::vector<int>>> generators;
  if (d == 1) generators.push_back({});
  else enumerate_generators(k, d, generators);

  std::vector<PatternSpec> family;
  std::set<std::string> seen;
  for (const auto& maps : generators) {
    PatternSpec gen = d == 1 ? all_ones({k}) : permutation_from_maps(k, maps);
    if (d == 1) gen.kind = PatternKind::permutation;  // the 1-d permutation matrix
    if (j == 1) {
      if (seen.insert(tensor_to_json(gen.tensor)).second) family.push_back(gen);
      continue;
    }
    for (int axis = 1; axis <= d; ++axis) {
      std::vector<int> k_vec(d, 1);
      k_vec[axis - 1] = j;
      PatternSpec member = block_permutation(gen, k_vec);
      if (seen.insert(tensor_to_json(member.tensor)).second)
        family.push_back(std::move(member));
    }
  }
  return family;
}

ConstructionReport corner_construction(const PatternSpec& p, const Coord& one_entry, int n) {
  if (p.kind != PatternKind::permutation || !is_permutation(p.tensor))
    throw std::invalid_argument("corner_construction: pattern must be a permutation matrix");
  const int d = p.tensor.dim();
  const int k = p.tensor.shape().dims()[0];
  for (int nl : p.tensor.shape().dims())
    if (nl != k) throw std::invalid_argument("corner_construction: pattern must be k x ... x k");
  if (!p.tensor.shape().in_range(one_entry) || !p.tensor.get(one_entry))
    throw std::invalid_argument("corner_construction: chosen cell is not a 1-entry of the pattern");
  if (n < k - 1) throw std::invalid_argument("corner_construction: need n >= k-1");

  Tensor01 a{Shape(std::vector<int>(d, n))};
  Coord c = first_coord(a.shape());
  if (n >= 1) {
    do {
      bool zero = true;
      for (int l = 0; l < d; ++l)
        if (!(one_entry[l] <= c[l] && c[l] <= n - k + one_entry[l])) {
          zero = false;
          break;
        }
      if (!zero) a.set(c, true);
    } while (next_coord(c, a.shape()));
  }

  ConstructionReport rep;
  rep.ones = a.ones_count();
  rep.target = p;
  rep.avoided = !contains(a, p.tensor);
  rep.output = std::move(a);
  return rep;
}

ConstructionReport corner_construction(const PatternSpec& p, int n) {
  auto onesv = p.tensor.ones();
  if (onesv.empty()) throw std::invalid_argument("corner_construction: empty pattern");
  return corner_construction(p, onesv.front(), n);
}

namespace {

// Clear the lexicographically smallest mapped 1-entry of the
// lexicographically first copy, until the host avoids the pattern.
int delete_until_clean(Tensor01& a, const Tensor01& p) {
  int steps = 0;
  for (;;) {
    auto copies = enumerate_copies(a, p, 1);
    if (copies.empty()) break;
    const Embedding& e = copies.front();
    Coord best;
    Coord h(a.dim());
    for (const Coord& pe : p.ones()) {
      for (int l = 0; l < a.dim(); ++l) h[l] = e.axis_maps[l][pe[l] - 1];
      if (best.empty() || h < best) best = h;
    }
    a.set(best, false);
    ++steps;
  }
  return steps;
}

}  // namespace

ConstructionReport deletion_construction(const std::vector<int>& k_vec, int n,
                                         std::uint64_t seed) {
  const int d = static_cast<int>(k_vec.size());
  long long prod = 1, sum = 0;
  int kmax = 1;
  for (int k : k_vec) {
    if (k < 1) throw std::invalid_argument("deletion_construction: extents must be positive");
    prod *= k;
    sum += k;
    kmax = std::max(kmax, k);
  }
  if (prod <= 1)
    throw std::invalid_argument("deletion_construction: need k_1 * ... * k_d > 1");
  if (n < kmax) throw std::invalid_argument("deletion_construction: need n >= max(k_vec)");

  const double beta = static_cast<double>(sum - d) / static_cast<double>(prod - 1);
  const double p = std::pow(static_cast<double>(n), -beta);

  Tensor01 a{Shape(std::vector<int>(d, n))};
  auto rng = make_rng(seed);
  std::bernoulli_distribution coin(p);
  const std::uint64_t cells = a.cells();
  for (std::uint64_t i = 0; i < cells; ++i)
    if (coin(rng)) a.set_at(i, true);

  ConstructionReport rep;
  rep.initial_ones = a.ones_count();
  rep.p = p;
  rep.seed = seed;
  rep.target = all_ones(k_vec);
  rep.deletion_steps = delete_until_clean(a, rep.target.tensor);
  rep.ones = a.ones_count();
  rep.avoided = !contains(a, rep.target.tensor);
  rep.output = std::move(a);
  return rep;
}

Tensor01 antidiagonal_multiplier(int s, int d) {
  if (s < 1 || d < 1) throw std::invalid_argument("antidiagonal_multiplier: s, d >= 1");
  Tensor01 t{Shape(std::vector<int>(d, s))};
  Coord c = first_coord(t.shape());
  do {
    int sum = 0;
    for (int v : c) sum += v;
    if (sum == s + d - 1) t.set(c, true);
  } while (next_coord(c, t.shape()));
  return t;
}

DyadicParams DyadicParams::paper(int r, int d, std::uint64_t seed) {
  if (r < 1 || d < 1) throw std::invalid_argument("DyadicParams: r, d >= 1");
  DyadicParams p;
  p.r = r;
  p.d = d;
  p.q = std::log(2.0) / (2.0 * std::pow(static_cast<double>(r), d - 1));
  p.seed = seed;
  return p;
}

std::vector<DyadicInterval> enumerate_dyadic_intervals(int n) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw std::invalid_argument("enumerate_dyadic_intervals: N must be a power of two");
  std::vector<DyadicInterval> out;
  for (int len = 1; len <= n; len *= 2)
    for (int s = 1; (s - 1) * len < n; ++s)
      out.push_back({(s - 1) * len + 1, len});
  return out;
}

DyadicOutcome dyadic_construction(const DyadicParams& params) {
  const int d = params.d;
  const int big_n = 1 << params.r;
  double q = params.q;
  const double paper_q = std::log(2.0) / (2.0 * std::pow(static_cast<double>(params.r), d - 1));
  if (q <= 0.0) q = paper_q;
  if (q >= 1.0) throw std::invalid_argument("dyadic_construction: need 0 < q < 1");
  const int target_edge = params.target_edge > 0 ? params.target_edge : 20 * params.r;

  const auto intervals = enumerate_dyadic_intervals(big_n);
  const std::size_t m = intervals.size();  // 2N-1

  auto rng = make_rng(params.seed);
  std::bernoulli_distribution coin(q);

  Tensor01 a = Tensor01::full(Shape(std::vector<int>(d, big_n)));
  std::vector<std::vector<DyadicInterval>> sampled;

  // lexicographic sweep over all (2N-1)^d hyper-rectangles
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    if (coin(rng)) {
      std::vector<DyadicInterval> rect(d);
      for (int l = 0; l < d; ++l) rect[l] = intervals[idx[l]];
      // clear every covered cell
      Coord c(d);
      std::vector<int> pos(d, 0);
      for (;;) {
        for (int l = 0; l < d; ++l) c[l] = rect[l].start + pos[l];
        a.set(c, false);
        int l = d - 1;
        while (l >= 0 && ++pos[l] == rect[l].length) pos[l--] = 0;
        if (l < 0) break;
      }
      sampled.push_back(std::move(rect));
    }
    int l = d - 1;
    while (l >= 0 && ++idx[l] == m) idx[l--] = 0;
    if (l < 0) break;
  }

  DyadicOutcome out;
  out.report.ones = a.ones_count();
  out.report.seed = params.seed;
  out.report.rectangle_count = static_cast<long long>(sampled.size());
  out.report.paper_params =
      !params.q_overridden && std::abs(q - paper_q) < 1e-12 && target_edge == 20 * params.r;
  out.report.target = all_ones(std::vector<int>(d, target_edge));
  out.report.interval_minor = true;
  out.report.avoided = !contains_interval_minor(a, out.report.target.tensor);
  out.report.output = std::move(a);
  out.sampled = std::move(sampled);
  return out;
}

Tensor01 random_avoiding_matrix(const Shape& shape, const Tensor01& p, double density,
                                std::uint64_t seed) {
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("random_avoiding_matrix: density in [0,1]");
  Tensor01 a{shape};
  auto rng = make_rng(seed);
  std::bernoulli_distribution coin(density);
  const std::uint64_t cells = a.cells();
  for (std::uint64_t i = 0; i < cells; ++i)
    if (coin(rng)) a.set_at(i, true);
  delete_until_clean(a, p);
  return a;
}

std::string ConstructionReport::to_json() const {
  nlohmann::json j;
  j["ones"] = ones;
  j["avoided"] = avoided;
  j["predicate"] = interval_minor ? "interval-minor" : "containment";
  j["seed"] = seed;
  j["target_kind"] = pattern_kind_name(target.kind);
  if (deletion_steps >= 0) j["deletion_steps"] = deletion_steps;
  if (initial_ones >= 0) j["initial_ones"] = initial_ones;
  if (p >= 0) j["p"] = p;
  if (rectangle_count >= 0) j["rectangle_count"] = rectangle_count;
  j["paper_params"] = paper_params;
  return j.dump();
}

}  // namespace matex
