#pragma once

#include <string>
#include <vector>

#include "matex/patterns.hpp"
#include "matex/tensor.hpp"

namespace matex {

enum class ChunkClass { two_in_row, j_tall, plain };

struct Chunk {
  Coord anchor;                // Q coordinate of the starting block
  int extent = 1;              // number of S-blocks along axis 1
  long long ones = 0;
  ChunkClass cls = ChunkClass::plain;
  std::vector<int> tall_axes;  // every axis j>=2 whose cross sections are all nonzero
};

struct ChunkDecomposition {
  Tensor01 source;
  int block_edge = 1;
  Tensor01 q;
  std::vector<Chunk> chunks;
};

// The Q marker matrix: 0 for zero S-blocks, 1 for the first nonzero block on
// each axis-1 line, and afterwards 1 exactly when the blocks since the
// previous marker (inclusive) hold two ones in one axis-1 line of the source.
Tensor01 build_Q(const Tensor01& a, int k);

ChunkDecomposition decompose(const Tensor01& a, int k);

struct AuditCheck {
  std::string name;
  long long value = 0;
  long long bound = 0;
  bool evaluable = false;
  bool holds = true;  // vacuously true when not evaluable
};

struct TallSlabCount {
  int axis = 2;
  int slab = 1;  // Q coordinate along that axis
  long long count = 0;
};

struct AuditReport {
  long long two_in_row_blocks = 0;  // S-blocks with two ones in one 1-row
  long long two_in_row_chunks = 0;
  long long tall_chunks = 0;        // j-tall for some j, not two_in_row
  long long plain_chunks = 0;
  std::vector<TallSlabCount> tall_per_slab;
  std::vector<AuditCheck> checks;
  bool all_hold = true;
  std::string to_json() const;
};

// Counts blocks and chunks of an avoiding host and checks them against the
// chunk-counting bounds, substituting exact solver values where desk-scale
// and reporting "not evaluable" otherwise. Throws if a contains p.
AuditReport audit_lemma_counts(const Tensor01& a, const PatternSpec& p, int k);

}  // namespace matex
