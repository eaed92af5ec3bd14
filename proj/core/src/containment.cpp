#include "matex/containment.hpp"

#include <algorithm>
#include <stdexcept>

namespace matex {

namespace {

// Backtracking over pattern 1-entries in lexicographic order. Each axis map
// is filled lazily; candidate values are kept strictly increasing with enough
// room for the untouched slots, so any partial assignment extends to a full
// strictly increasing map.
struct EmbedSearch {
  const Tensor01& a;
  const Tensor01& p;
  const Coord* extra;  // one host cell treated as 1 (incremental solver check)
  int d;
  std::vector<Coord> entries;
  std::vector<std::vector<int>> map;  // map[l][slot], slot 1-based, 0 = unassigned

  EmbedSearch(const Tensor01& a_, const Tensor01& p_, const Coord* extra_)
      : a(a_), p(p_), extra(extra_), d(a_.dim()), entries(p_.ones()) {
    map.resize(d);
    for (int l = 0; l < d; ++l) map[l].assign(p.shape().dims()[l] + 1, 0);
  }

  bool host_one(const Coord& c) const {
    if (extra && *extra == c) return true;
    return a.get(c);
  }

  bool run() { return search_entry(0); }

  bool search_entry(std::size_t e) {
    if (e == entries.size()) return true;
    return assign_entry(e, 0);
  }

  bool assign_entry(std::size_t e, int l) {
    if (l == d) {
      Coord h(d);
      for (int i = 0; i < d; ++i) h[i] = map[i][entries[e][i]];
      if (!host_one(h)) return false;
      return search_entry(e + 1);
    }
    const int t = entries[e][l];
    if (map[l][t] != 0) return assign_entry(e, l + 1);

    const int k = p.shape().dims()[l];
    const int n = a.shape().dims()[l];
    int tlo = t - 1;
    while (tlo >= 1 && map[l][tlo] == 0) --tlo;
    const int vlo = tlo >= 1 ? map[l][tlo] : 0;
    const int lo = vlo + (t - std::max(tlo, 0));
    int thi = t + 1;
    while (thi <= k && map[l][thi] == 0) ++thi;
    const int vhi = thi <= k ? map[l][thi] : n + 1;
    const int hi = vhi - (thi - t);

    for (int v = lo; v <= hi; ++v) {
      map[l][t] = v;
      if (assign_entry(e, l + 1)) return true;
    }
    map[l][t] = 0;
    return false;
  }

  Embedding witness() const {
    Embedding w;
    w.axis_maps.resize(d);
    for (int l = 0; l < d; ++l) {
      const int k = p.shape().dims()[l];
      w.axis_maps[l].resize(k);
      int prev = 0;
      for (int t = 1; t <= k; ++t) {
        const int v = map[l][t] != 0 ? map[l][t] : prev + 1;
        w.axis_maps[l][t - 1] = v;
        prev = v;
      }
    }
    return w;
  }
};

void check_same_dim(const Tensor01& a, const Tensor01& p, const char* who) {
  if (a.dim() != p.dim())
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

bool fits(const Tensor01& a, const Tensor01& p) {
  for (int l = 0; l < a.dim(); ++l)
    if (p.shape().dims()[l] > a.shape().dims()[l]) return false;
  return true;
}

}  // namespace

bool contains(const Tensor01& a, const Tensor01& p, Embedding* witness) {
  check_same_dim(a, p, "contains");
  if (p.ones_count() == 0) throw std::invalid_argument("contains: pattern has no ones");
  if (!fits(a, p) || a.ones_count() < p.ones_count()) return false;
  if (witness) {
    auto copies = enumerate_copies(a, p, 1);
    if (copies.empty()) return false;
    *witness = copies.front();
    return true;
  }
  EmbedSearch s(a, p, nullptr);
  return s.run();
}

bool would_create_copy(const Tensor01& a, const Tensor01& p, const Coord& c) {
  check_same_dim(a, p, "would_create_copy");
  if (p.ones_count() == 0)
    throw std::invalid_argument("would_create_copy: pattern has no ones");
  if (a.get(c))
    throw std::invalid_argument("would_create_copy: cell is already a 1-entry");
  if (!fits(a, p) || a.ones_count() + 1 < p.ones_count()) return false;

  const int d = a.dim();
  const auto entries = p.ones();
  for (std::size_t anchor = 0; anchor < entries.size(); ++anchor) {
    EmbedSearch s(a, p, &c);
    bool feasible = true;
    for (int l = 0; l < d && feasible; ++l) {
      const int slot = entries[anchor][l];
      const int k = p.shape().dims()[l];
      const int n = a.shape().dims()[l];
      if (c[l] < slot || c[l] > n - (k - slot)) feasible = false;
      else s.map[l][slot] = c[l];
    }
    if (!feasible) continue;
    if (s.run()) return true;
  }
  return false;
}

namespace {

// d-dimensional prefix counts for O(2^d) nonzero-block queries.
struct PrefixCounts {
  const Shape shape;
  std::vector<long long> sums;  // indexed 0..n_l inclusive per axis

  explicit PrefixCounts(const Tensor01& a) : shape(a.shape()) {
    const int d = shape.dim();
    std::vector<long long> stride(d);
    long long total = 1;
    for (int l = d - 1; l >= 0; --l) {
      stride[l] = total;
      total *= shape.dims()[l] + 1;
    }
    sums.assign(total, 0);
    for (const Coord& c : a.ones()) {
      long long idx = 0;
      for (int l = 0; l < d; ++l) idx += c[l] * stride[l];
      sums[idx] += 1;
    }
    // sweep axis by axis to accumulate prefixes
    for (int l = 0; l < d; ++l) {
      for (long long idx = 0; idx < total; ++idx) {
        const long long pos = (idx / stride[l]) % (shape.dims()[l] + 1);
        if (pos > 0) sums[idx] += sums[idx - stride[l]];
      }
    }
    stride_ = stride;
  }

  // ones in the box [lo_l+1 .. hi_l] per axis (lo exclusive, hi inclusive)
  long long box(const std::vector<int>& lo, const std::vector<int>& hi) const {
    const int d = shape.dim();
    long long count = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      long long idx = 0;
      int sign = 1;
      for (int l = 0; l < d; ++l) {
        if (mask & (1u << l)) {
          idx += static_cast<long long>(lo[l]) * stride_[l];
          sign = -sign;
        } else {
          idx += static_cast<long long>(hi[l]) * stride_[l];
        }
      }
      count += sign * sums[idx];
    }
    return count;
  }

  std::vector<long long> stride_;
};

// Recursive search over compositions of each axis into k consecutive
// nonempty blocks. Valid interval systems can always be enlarged to such a
// partition, so this search is exhaustive.
struct MinorSearch {
  const Tensor01& b;
  const PrefixCounts pc;
  int d;
  std::vector<std::vector<int>> bounds;  // bounds[l]: k+1 block edges, 0..n

  MinorSearch(const Tensor01& a, const Tensor01& b_) : b(b_), pc(a), d(a.dim()) {
    bounds.resize(d);
  }

  bool run() { return search_axis(0); }

  bool search_axis(int l) {
    if (l == d) return check();
    const int k = b.shape().dims()[l];
    const int n = pc.shape.dims()[l];
    std::vector<int>& bd = bounds[l];
    bd.assign(k + 1, 0);
    bd[k] = n;
    return compose(l, 1);
  }

  bool compose(int l, int i) {
    const int k = b.shape().dims()[l];
    const int n = pc.shape.dims()[l];
    if (i == k) return search_axis(l + 1);
    std::vector<int>& bd = bounds[l];
    for (int cut = bd[i - 1] + 1; cut <= n - (k - i); ++cut) {
      bd[i] = cut;
      if (compose(l, i + 1)) return true;
    }
    return false;
  }

  bool check() const {
    std::vector<int> lo(d), hi(d);
    for (const Coord& e : b.ones()) {
      for (int l = 0; l < d; ++l) {
        lo[l] = bounds[l][e[l] - 1];
        hi[l] = bounds[l][e[l]];
      }
      if (pc.box(lo, hi) == 0) return false;
    }
    return true;
  }
};

}  // namespace

bool contains_interval_minor(const Tensor01& a, const Tensor01& b,
                             IntervalSystem* witness) {
  check_same_dim(a, b, "contains_interval_minor");
  if (b.ones_count() == 0) return true;
  for (int l = 0; l < a.dim(); ++l)
    if (b.shape().dims()[l] > a.shape().dims()[l]) return false;
  if (a.ones_count() == 0) return false;

  MinorSearch s(a, b);
  if (!s.run()) return false;
  if (witness) {
    witness->intervals.assign(a.dim(), {});
    for (int l = 0; l < a.dim(); ++l) {
      const auto& bd = s.bounds[l];
      for (std::size_t i = 0; i + 1 < bd.size(); ++i)
        witness->intervals[l].push_back({bd[i] + 1, bd[i + 1]});
    }
  }
  return true;
}

namespace {

struct CopyEnum {
  const Tensor01& a;
  const Tensor01& p;
  std::size_t limit;
  int d;
  std::vector<Coord> entries;
  std::vector<std::vector<int>> maps;  // full per-axis maps, 0-based slots
  std::vector<Embedding> out;

  CopyEnum(const Tensor01& a_, const Tensor01& p_, std::size_t limit_)
      : a(a_), p(p_), limit(limit_), d(a_.dim()), entries(p_.ones()) {
    maps.resize(d);
  }

  void run() { axis(0); }

  void axis(int l) {
    if (out.size() >= limit) return;
    if (l == d) {
      if (check()) {
        Embedding e;
        e.axis_maps = maps;
        out.push_back(std::move(e));
      }
      return;
    }
    const int k = p.shape().dims()[l];
    maps[l].assign(k, 0);
    combo(l, 0, 1);
  }

  void combo(int l, int slot, int from) {
    if (out.size() >= limit) return;
    const int k = p.shape().dims()[l];
    const int n = a.shape().dims()[l];
    if (slot == k) {
      axis(l + 1);
      return;
    }
    for (int v = from; v <= n - (k - slot - 1); ++v) {
      maps[l][slot] = v;
      combo(l, slot + 1, v + 1);
      if (out.size() >= limit) return;
    }
  }

  bool check() const {
    Coord h(d);
    for (const Coord& e : entries) {
      for (int l = 0; l < d; ++l) h[l] = maps[l][e[l] - 1];
      if (!a.get(h)) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<Embedding> enumerate_copies(const Tensor01& a, const Tensor01& p,
                                        std::size_t limit) {
  check_same_dim(a, p, "enumerate_copies");
  if (limit < 1) throw std::invalid_argument("enumerate_copies: limit must be >= 1");
  if (p.ones_count() == 0)
    throw std::invalid_argument("enumerate_copies: pattern has no ones");
  if (!fits(a, p) || a.ones_count() < p.ones_count()) return {};
  CopyEnum e(a, p, limit);
  e.run();
  return e.out;
}

}  // namespace matex
