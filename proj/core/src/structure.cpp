#include "matex/structure.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

#include "matex/containment.hpp"
#include "matex/extremal.hpp"

namespace matex {

namespace {

struct Box {
  std::vector<int> lo, hi;  // inclusive, 1-based
};

// visit every cell of the box
template <typename F>
void for_each_cell(const Box& box, F&& f) {
  const int d = static_cast<int>(box.lo.size());
  Coord c = box.lo;
  for (;;) {
    f(c);
    int l = d - 1;
    while (l >= 0 && ++c[l] > box.hi[l]) c[l] = box.lo[l], --l;
    if (l < 0) break;
  }
}

long long box_ones(const Tensor01& a, const Box& box) {
  long long n = 0;
  for_each_cell(box, [&](const Coord& c) { n += a.get(c) ? 1 : 0; });
  return n;
}

// true iff some axis-1 line inside the box holds two or more ones
bool has_two_in_row(const Tensor01& a, const Box& box) {
  const int d = a.dim();
  Box rest{std::vector<int>(box.lo.begin() + 1, box.lo.end()),
           std::vector<int>(box.hi.begin() + 1, box.hi.end())};
  if (d == 1) rest = Box{{1}, {1}};
  bool found = false;
  for_each_cell(rest, [&](const Coord& other) {
    if (found) return;
    int count = 0;
    Coord c(d);
    for (int l = 1; l < d; ++l) c[l] = other[l - 1];
    for (int i1 = box.lo[0]; i1 <= box.hi[0] && count < 2; ++i1) {
      c[0] = i1;
      if (a.get(c)) ++count;
    }
    if (count >= 2) found = true;
  });
  return found;
}

Box block_box(const Coord& q_coord, int k, int extent) {
  const int d = static_cast<int>(q_coord.size());
  Box box{std::vector<int>(d), std::vector<int>(d)};
  for (int l = 0; l < d; ++l) {
    box.lo[l] = (q_coord[l] - 1) * k + 1;
    box.hi[l] = q_coord[l] * k;
  }
  box.hi[0] = (q_coord[0] + extent - 1) * k;
  return box;
}

void check_divisible(const Tensor01& a, int k, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": block edge must be positive");
  for (int n : a.shape().dims())
    if (n % k != 0)
      throw std::invalid_argument(std::string(who) + ": extents must be divisible by the block edge");
}

}  // namespace

Tensor01 build_Q(const Tensor01& a, int k) {
  check_divisible(a, k, "build_Q");
  const int d = a.dim();
  Tensor01 blocks = block_contraction(a, k);
  Tensor01 q{blocks.shape()};
  const int n1 = q.shape().extent(1);

  std::vector<int> rest_dims(blocks.shape().dims().begin() + 1, blocks.shape().dims().end());
  Shape rest_shape = d > 1 ? Shape(rest_dims) : Shape({1});
  Coord rest = first_coord(rest_shape);
  do {
    Coord qc(d);
    for (int l = 1; l < d; ++l) qc[l] = rest[l - 1];
    int last_marked = 0;
    for (int i1 = 1; i1 <= n1; ++i1) {
      qc[0] = i1;
      if (!blocks.get(qc)) continue;                    // rule 1
      if (last_marked == 0) {                           // rule 2
        q.set(qc, true);
        last_marked = i1;
        continue;
      }
      Coord span = qc;                                  // rule 3
      span[0] = last_marked;
      Box box = block_box(span, k, i1 - last_marked + 1);
      if (has_two_in_row(a, box)) {
        q.set(qc, true);
        last_marked = i1;
      }
    }
  } while (next_coord(rest, rest_shape));
  return q;
}

ChunkDecomposition decompose(const Tensor01& a, int k) {
  check_divisible(a, k, "decompose");
  const int d = a.dim();
  ChunkDecomposition dec;
  dec.source = a;
  dec.block_edge = k;
  dec.q = build_Q(a, k);
  const int n1 = dec.q.shape().extent(1);

  for (const Coord& anchor : dec.q.ones()) {
    int next = n1 + 1;
    Coord probe = anchor;
    for (int i1 = anchor[0] + 1; i1 <= n1; ++i1) {
      probe[0] = i1;
      if (dec.q.get(probe)) {
        next = i1;
        break;
      }
    }
    Chunk ch;
    ch.anchor = anchor;
    ch.extent = next - anchor[0];
    const Box box = block_box(anchor, k, ch.extent);
    ch.ones = box_ones(a, box);

    for (int j = 2; j <= d; ++j) {
      bool tall = true;
      for (int sec = box.lo[j - 1]; sec <= box.hi[j - 1] && tall; ++sec) {
        Box slice = box;
        slice.lo[j - 1] = slice.hi[j - 1] = sec;
        if (box_ones(a, slice) == 0) tall = false;
      }
      if (tall) ch.tall_axes.push_back(j);
    }

    if (has_two_in_row(a, box)) ch.cls = ChunkClass::two_in_row;
    else if (!ch.tall_axes.empty()) ch.cls = ChunkClass::j_tall;
    else ch.cls = ChunkClass::plain;
    dec.chunks.push_back(std::move(ch));
  }
  return dec;
}

namespace {

bool f_evaluable(int n, int j, int k, int d) {
  if (d == 1) return static_cast<long long>(j) * k <= 24 && n <= 24;
  if (d == 2) return k <= 3 && n <= 5 && j <= 3;
  return false;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

AuditReport audit_lemma_counts(const Tensor01& a, const PatternSpec& p, int k) {
  check_divisible(a, k, "audit_lemma_counts");
  if (p.kind != PatternKind::tuple_permutation || p.tuple_arity != 2 || p.tuple_axis != 1)
    throw std::invalid_argument(
        "audit_lemma_counts: pattern must be a double permutation with the tuple along axis 1");
  if (p.tensor.shape().extent(2 <= p.tensor.dim() ? 2 : 1) != k && p.tensor.dim() > 1)
    throw std::invalid_argument("audit_lemma_counts: generator edge does not match k");
  if (contains(a, p.tensor))
    throw std::invalid_argument("audit_lemma_counts: host contains the pattern; audit undefined");

  const int d = a.dim();
  const int n = a.shape().extent(1) / k;
  AuditReport rep;

  // (a) S-blocks with two ones in one 1-row
  {
    Tensor01 grid = block_contraction(a, k);
    Coord qc = first_coord(grid.shape());
    do {
      if (has_two_in_row(a, block_box(qc, k, 1))) ++rep.two_in_row_blocks;
    } while (next_coord(qc, grid.shape()));
  }

  ChunkDecomposition dec = decompose(a, k);
  std::map<std::pair<int, int>, long long> slab;
  long long case1_ones = 0, case2_ones = 0, case3_ones = 0;
  long long max_plain_ones = 0;
  for (const Chunk& ch : dec.chunks) {
    switch (ch.cls) {
      case ChunkClass::two_in_row:
        ++rep.two_in_row_chunks;
        case1_ones += ch.ones;
        break;
      case ChunkClass::j_tall:
        ++rep.tall_chunks;
        case2_ones += ch.ones;
        break;
      case ChunkClass::plain:
        ++rep.plain_chunks;
        case3_ones += ch.ones;
        max_plain_ones = std::max(max_plain_ones, ch.ones);
        break;
    }
    for (int j : ch.tall_axes) slab[{j, ch.anchor[j - 1]}] += 1;
  }
  for (const auto& [key, count] : slab)
    rep.tall_per_slab.push_back({key.first, key.second, count});

  auto add_check = [&](std::string name, long long value, int fn, int fj, int fk, int fd,
                       long long factor) {
    AuditCheck c;
    c.name = std::move(name);
    c.value = value;
    c.evaluable = f_evaluable(fn, fj, fk, fd);
    if (c.evaluable) {
      c.bound = factor * tuple_family_extremum(fn, fj, fk, fd);
      c.holds = value <= c.bound;
    }
    rep.checks.push_back(c);
  };

  // Lemma on wide blocks: #{S with two ones in a 1-row} <= F(n,1,k,d)
  add_check("two_in_row_blocks <= F(n,1,k,d)", rep.two_in_row_blocks, n, 1, k, d, 1);

  // j-tall chunks per (j, m) slab <= F(n, 1+k^{d-2}, k, d-1)
  if (d >= 2) {
    long long worst = 0;
    for (const auto& s : rep.tall_per_slab) worst = std::max(worst, s.count);
    add_check("max j-tall chunks per slab <= F(n,1+k^{d-2},k,d-1)", worst, n,
              1 + static_cast<int>(ipow(k, d - 2)), k, d - 1, 1);
  }

  // three-case ones totals
  add_check("case1 ones <= k^d * F(n,1,k,d)", case1_ones, n, 1, k, d, ipow(k, d));
  if (d >= 2)
    add_check("case2 ones <= (d-1) n k^{d-1} F(n,1+k^{d-2},k,d-1)", case2_ones, n,
              1 + static_cast<int>(ipow(k, d - 2)), k, d - 1,
              static_cast<long long>(d - 1) * n * ipow(k, d - 1));
  add_check("case3 ones <= (k-1)^{d-1} F(n,2,k,d)", case3_ones, n, 2, k, d,
            ipow(k - 1, d - 1));

  // per-chunk cap for plain chunks
  {
    AuditCheck c;
    c.name = "plain chunk ones <= (k-1)^{d-1}";
    c.value = max_plain_ones;
    c.bound = ipow(k - 1, d - 1);
    c.evaluable = true;
    c.holds = max_plain_ones <= c.bound;
    rep.checks.push_back(c);
  }

  rep.all_hold = true;
  for (const AuditCheck& c : rep.checks)
    if (c.evaluable && !c.holds) rep.all_hold = false;
  return rep;
}

std::string AuditReport::to_json() const {
  nlohmann::json j;
  j["two_in_row_blocks"] = two_in_row_blocks;
  j["two_in_row_chunks"] = two_in_row_chunks;
  j["tall_chunks"] = tall_chunks;
  j["plain_chunks"] = plain_chunks;
  auto slabs = nlohmann::json::array();
  for (const auto& s : tall_per_slab)
    slabs.push_back({{"axis", s.axis}, {"slab", s.slab}, {"count", s.count}});
  j["tall_per_slab"] = std::move(slabs);
  auto checks = nlohmann::json::array();
  for (const auto& c : this->checks) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["value"] = c.value;
    if (c.evaluable) {
      cj["bound"] = c.bound;
      cj["holds"] = c.holds;
    } else {
      cj["bound"] = "not evaluable";
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_hold"] = all_hold;
  return j.dump();
}

}  // namespace matex
