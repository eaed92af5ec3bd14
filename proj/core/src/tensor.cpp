#include "matex/tensor.hpp"

#include <stdexcept>
#include <string>

namespace matex {

Shape::Shape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("Shape: need at least one axis");
  if (dim() > kMaxDim)
    throw std::invalid_argument("Shape: dimension " + std::to_string(dim()) +
                                " exceeds cap " + std::to_string(kMaxDim));
  std::uint64_t total = 1;
  for (int n : dims_) {
    if (n < 1) throw std::invalid_argument("Shape: extents must be positive");
    total *= static_cast<std::uint64_t>(n);
    if (total > kMaxCells)
      throw std::invalid_argument("Shape: cell count exceeds desk-scale cap");
  }
}

int Shape::extent(int axis) const {
  if (axis < 1 || axis > dim()) throw std::out_of_range("Shape: axis out of range");
  return dims_[axis - 1];
}

std::uint64_t Shape::cells() const {
  std::uint64_t total = 1;
  for (int n : dims_) total *= static_cast<std::uint64_t>(n);
  return total;
}

bool Shape::in_range(const Coord& c) const {
  if (static_cast<int>(c.size()) != dim()) return false;
  for (int l = 0; l < dim(); ++l)
    if (c[l] < 1 || c[l] > dims_[l]) return false;
  return true;
}

Tensor01::Tensor01(Shape shape) : shape_(std::move(shape)) {
  words_.assign((shape_.cells() + 63) / 64, 0);
}

Tensor01 Tensor01::full(Shape shape) {
  Tensor01 t(std::move(shape));
  const std::uint64_t n = t.cells();
  for (std::uint64_t i = 0; i < n; ++i) t.set_at(i, true);
  return t;
}

std::uint64_t Tensor01::offset_of(const Coord& c) const {
  if (!shape_.in_range(c)) throw std::out_of_range("Tensor01: coordinate out of range");
  std::uint64_t off = 0;
  for (int l = 0; l < dim(); ++l)
    off = off * static_cast<std::uint64_t>(shape_.dims()[l]) +
          static_cast<std::uint64_t>(c[l] - 1);
  return off;
}

Coord Tensor01::coord_of(std::uint64_t off) const {
  Coord c(dim());
  for (int l = dim() - 1; l >= 0; --l) {
    const auto n = static_cast<std::uint64_t>(shape_.dims()[l]);
    c[l] = static_cast<int>(off % n) + 1;
    off /= n;
  }
  return c;
}

bool Tensor01::get(const Coord& c) const { return get_at(offset_of(c)); }

void Tensor01::set(const Coord& c, bool v) { set_at(offset_of(c), v); }

bool Tensor01::get_at(std::uint64_t off) const {
  return (words_[off >> 6] >> (off & 63)) & 1;
}

void Tensor01::set_at(std::uint64_t off, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (off & 63);
  std::uint64_t& w = words_[off >> 6];
  const bool cur = w & mask;
  if (cur == v) return;
  w ^= mask;
  ones_ += v ? 1 : -1;
}

std::vector<Coord> Tensor01::ones() const {
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(ones_));
  const std::uint64_t n = cells();
  for (std::uint64_t i = 0; i < n; ++i)
    if (get_at(i)) out.push_back(coord_of(i));
  return out;
}

bool Tensor01::operator==(const Tensor01& other) const {
  return shape_ == other.shape_ && words_ == other.words_;
}

Coord first_coord(const Shape& s) { return Coord(s.dim(), 1); }

bool next_coord(Coord& c, const Shape& s) {
  for (int l = s.dim() - 1; l >= 0; --l) {
    if (c[l] < s.dims()[l]) {
      ++c[l];
      return true;
    }
    c[l] = 1;
  }
  return false;
}

Tensor01 cross_section(const Tensor01& t, int axis, int index) {
  const int d = t.dim();
  if (d < 2) throw std::invalid_argument("cross_section: need dimension >= 2");
  if (axis < 1 || axis > d) throw std::out_of_range("cross_section: axis out of range");
  if (index < 1 || index > t.shape().extent(axis))
    throw std::out_of_range("cross_section: index out of range");

  std::vector<int> dims;
  for (int l = 1; l <= d; ++l)
    if (l != axis) dims.push_back(t.shape().extent(l));
  Tensor01 out{Shape(dims)};

  Coord oc = first_coord(out.shape());
  Coord c(d);
  do {
    for (int l = 0, m = 0; l < d; ++l)
      c[l] = (l == axis - 1) ? index : oc[m++];
    if (t.get(c)) out.set(oc, true);
  } while (next_coord(oc, out.shape()));
  return out;
}

std::vector<int> line(const Tensor01& t, int axis, const Coord& fixed) {
  const int d = t.dim();
  if (axis < 1 || axis > d) throw std::out_of_range("line: axis out of range");
  if (static_cast<int>(fixed.size()) != d - 1)
    throw std::invalid_argument("line: fixed coordinate must have length d-1");
  Coord c(d);
  for (int l = 0, m = 0; l < d; ++l)
    if (l != axis - 1) c[l] = fixed[m++];
  const int n = t.shape().extent(axis);
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    c[axis - 1] = i;
    out[i - 1] = t.get(c) ? 1 : 0;
  }
  return out;
}

Tensor01 kronecker(const Tensor01& m, const Tensor01& n) {
  if (m.dim() != n.dim())
    throw std::invalid_argument("kronecker: dimension mismatch");
  const int d = m.dim();
  std::vector<int> dims(d);
  for (int l = 0; l < d; ++l)
    dims[l] = m.shape().dims()[l] * n.shape().dims()[l];
  Tensor01 out{Shape(dims)};

  Coord c(d);
  for (const Coord& mc : m.ones()) {
    for (const Coord& nc : n.ones()) {
      for (int l = 0; l < d; ++l)
        c[l] = (mc[l] - 1) * n.shape().dims()[l] + nc[l];
      out.set(c, true);
    }
  }
  return out;
}

Tensor01 contract_axis(const Tensor01& t, int axis, const std::vector<int>& group_sizes) {
  const int d = t.dim();
  if (axis < 1 || axis > d) throw std::out_of_range("contract_axis: axis out of range");
  int sum = 0;
  for (int g : group_sizes) {
    if (g < 1) throw std::invalid_argument("contract_axis: group sizes must be positive");
    sum += g;
  }
  if (sum != t.shape().extent(axis))
    throw std::invalid_argument("contract_axis: groups must partition the axis");

  std::vector<int> dims = t.shape().dims();
  dims[axis - 1] = static_cast<int>(group_sizes.size());
  Tensor01 out{Shape(dims)};

  // group index for each original position along the axis
  std::vector<int> group_of(t.shape().extent(axis) + 1);
  int pos = 1;
  for (int g = 0; g < static_cast<int>(group_sizes.size()); ++g)
    for (int i = 0; i < group_sizes[g]; ++i) group_of[pos++] = g + 1;

  for (Coord c : t.ones()) {
    c[axis - 1] = group_of[c[axis - 1]];
    out.set(c, true);
  }
  return out;
}

Tensor01 block_contraction(const Tensor01& a, int block_edge) {
  if (block_edge < 1) throw std::invalid_argument("block_contraction: block edge must be positive");
  const int d = a.dim();
  std::vector<int> dims(d);
  for (int l = 0; l < d; ++l) {
    if (a.shape().dims()[l] % block_edge != 0)
      throw std::invalid_argument("block_contraction: extents must be divisible by the block edge");
    dims[l] = a.shape().dims()[l] / block_edge;
  }
  Tensor01 out{Shape(dims)};
  for (Coord c : a.ones()) {
    for (int l = 0; l < d; ++l) c[l] = (c[l] - 1) / block_edge + 1;
    out.set(c, true);
  }
  return out;
}

Tensor01 j_remainder(const Tensor01& m, int axis) {
  const int d = m.dim();
  if (d < 2) throw std::invalid_argument("j_remainder: need dimension >= 2");
  if (axis < 1 || axis > d) throw std::out_of_range("j_remainder: axis out of range");
  std::vector<int> dims;
  for (int l = 1; l <= d; ++l)
    if (l != axis) dims.push_back(m.shape().extent(l));
  Tensor01 out{Shape(dims)};
  for (const Coord& c : m.ones()) {
    Coord oc;
    oc.reserve(d - 1);
    for (int l = 0; l < d; ++l)
      if (l != axis - 1) oc.push_back(c[l]);
    out.set(oc, true);
  }
  return out;
}

}  // namespace matex
