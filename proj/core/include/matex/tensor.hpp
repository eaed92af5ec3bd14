#pragma once

#include <cstdint>
#include <vector>

namespace matex {

// 1-based coordinate, length d.
using Coord = std::vector<int>;

// Limits for desk-scale work. Larger inputs are rejected up front.
inline constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 24;
inline constexpr int kMaxDim = 6;

class Shape {
public:
  Shape() = default;
  explicit Shape(std::vector<int> dims);

  int dim() const { return static_cast<int>(dims_.size()); }
  int extent(int axis) const;  // axis in 1..d
  const std::vector<int>& dims() const { return dims_; }
  std::uint64_t cells() const;
  bool in_range(const Coord& c) const;

  bool operator==(const Shape&) const = default;

private:
  std::vector<int> dims_;
};

// Dense 0-1 matrix of dimension 1..6, bit-packed 64 cells per word.
// Cell order is last-axis-fastest; all public indexing is 1-based.
class Tensor01 {
public:
  Tensor01() = default;
  explicit Tensor01(Shape shape);
  static Tensor01 full(Shape shape);  // all cells set to 1

  const Shape& shape() const { return shape_; }
  int dim() const { return shape_.dim(); }
  std::uint64_t cells() const { return shape_.cells(); }

  bool get(const Coord& c) const;
  void set(const Coord& c, bool v);
  long long ones_count() const { return ones_; }

  std::uint64_t offset_of(const Coord& c) const;  // last-axis-fastest
  bool get_at(std::uint64_t off) const;
  void set_at(std::uint64_t off, bool v);
  Coord coord_of(std::uint64_t off) const;

  std::vector<Coord> ones() const;  // lexicographically sorted

  bool operator==(const Tensor01& other) const;

private:
  Shape shape_;
  std::vector<std::uint64_t> words_;
  long long ones_ = 0;
};

Coord first_coord(const Shape& s);
// Lexicographic successor; returns false once c was the last coordinate.
bool next_coord(Coord& c, const Shape& s);

// Slice with the given axis fixed at index; result has dimension d-1.
Tensor01 cross_section(const Tensor01& t, int axis, int index);

// The axis-l line with the other coordinates fixed (length d-1, axis order).
std::vector<int> line(const Tensor01& t, int axis, const Coord& fixed);

Tensor01 kronecker(const Tensor01& m, const Tensor01& n);

// OR together consecutive runs along one axis; group_sizes must sum to the extent.
Tensor01 contract_axis(const Tensor01& t, int axis, const std::vector<int>& group_sizes);

// Blockwise OR over the uniform t x ... x t grid; every extent must divide evenly.
Tensor01 block_contraction(const Tensor01& a, int block_edge);

// Collapse one axis by OR; result has dimension d-1.
Tensor01 j_remainder(const Tensor01& m, int axis);

}  // namespace matex
