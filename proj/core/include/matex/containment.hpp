#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "matex/tensor.hpp"

namespace matex {

// Per-axis strictly increasing index maps: axis_maps[l][t-1] is the host
// index chosen for pattern index t along axis l+1.
struct Embedding {
  std::vector<std::vector<int>> axis_maps;
};

// Per-axis disjoint consecutive intervals, increasing order, as (start, end).
struct IntervalSystem {
  std::vector<std::vector<std::pair<int, int>>> intervals;
};

// Ordinary containment: submatrix plus dominance. When witness is non-null
// and the answer is true, the lexicographically least embedding is stored.
bool contains(const Tensor01& a, const Tensor01& p, Embedding* witness = nullptr);

// Incremental check for the solver: requires a(c) = 0 and a avoiding p;
// true iff setting a(c) := 1 creates a copy of p (the copy must use c).
bool would_create_copy(const Tensor01& a, const Tensor01& p, const Coord& c);

bool contains_interval_minor(const Tensor01& a, const Tensor01& b,
                             IntervalSystem* witness = nullptr);

// First `limit` embeddings in lexicographic order over the concatenated
// per-axis maps (all of them if fewer exist).
std::vector<Embedding> enumerate_copies(const Tensor01& a, const Tensor01& p,
                                        std::size_t limit);

}  // namespace matex
