#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matex/tensor.hpp"

namespace matex {

enum class PatternKind { permutation, all_ones, block_permutation, tuple_permutation, custom };

std::string pattern_kind_name(PatternKind k);

struct PatternSpec {
  Tensor01 tensor;
  PatternKind kind = PatternKind::custom;
  std::vector<int> k_vec;  // all-ones factor extents, when applicable
  int tuple_axis = 0;      // 1-based; 0 when not a tuple permutation
  int tuple_arity = 0;     // j; 0 when not a tuple permutation
  std::string provenance;

  std::uint64_t canonical_hash() const;  // digest of the JSON serialization
};

// True iff every l-cross section has exactly one 1, for every axis l.
bool is_permutation(const Tensor01& t);

// Classify an arbitrary tensor loaded from a file.
PatternSpec classify_pattern(const Tensor01& t);

PatternSpec identity_permutation(int k, int d);

// Ones at (i, maps[0][i-1], ..., maps[d-2][i-1]); each map a bijection of 1..k.
PatternSpec permutation_from_maps(int k, const std::vector<std::vector<int>>& maps);

PatternSpec random_permutation(int k, int d, std::uint64_t seed);
// As above but conditioned on a 1-entry at a corner of the index box.
PatternSpec random_permutation_with_corner(int k, int d, std::uint64_t seed);

PatternSpec all_ones(const std::vector<int>& k_vec);

// kronecker(P, R^{k_vec}); tuple_permutation when exactly one k exceeds 1.
PatternSpec block_permutation(const PatternSpec& p, const std::vector<int>& k_vec);

// Every j-tuple permutation matrix generated by a k x ... x k permutation,
// over all generators and all d tuple-axis placements. j = 1 yields the
// plain permutation family. Feasible for k <= 3.
std::vector<PatternSpec> tuple_permutation_family(int j, int k, int d);

struct ConstructionReport {
  Tensor01 output;
  long long ones = 0;
  PatternSpec target;
  bool avoided = false;  // always verified by the exact checker
  bool interval_minor = false;  // predicate used for the verdict
  std::uint64_t seed = 0;
  int deletion_steps = -1;
  long long initial_ones = -1;
  double p = -1.0;            // deletion density n^{-beta}
  long long rectangle_count = -1;
  bool paper_params = true;
  std::string to_json() const;
};

// Avoiding matrix with n^d - (n-k+1)^d ones: zero box spanned from the
// chosen 1-entry of the k x ... x k permutation p, ones elsewhere.
ConstructionReport corner_construction(const PatternSpec& p, const Coord& one_entry, int n);
ConstructionReport corner_construction(const PatternSpec& p, int n);  // lex-least 1-entry

// Random matrix at density n^{-beta(k_vec)}, then repeatedly clear the
// lexicographically smallest 1-entry of the lexicographically first copy of
// R^{k_vec} until none remains.
ConstructionReport deletion_construction(const std::vector<int>& k_vec, int n, std::uint64_t seed);

// s x ... x s matrix with ones exactly on the anti-diagonal i1+...+id = s+d-1.
Tensor01 antidiagonal_multiplier(int s, int d);

struct DyadicParams {
  int r = 1;
  int d = 2;
  double q = 0.0;
  std::uint64_t seed = 0;
  bool q_overridden = false;  // flagged whenever q deviates from ln2 / (2 r^{d-1})
  int target_edge = 0;        // interval-minor target edge; 0 means the default 20*r

  static DyadicParams paper(int r, int d, std::uint64_t seed);
};

struct DyadicInterval {
  int start = 1;
  int length = 1;  // always a power of two
  bool operator==(const DyadicInterval&) const = default;
};

// All 2N-1 dyadic intervals inside {1..N}; N must be a power of two.
std::vector<DyadicInterval> enumerate_dyadic_intervals(int n);

struct DyadicOutcome {
  ConstructionReport report;
  std::vector<std::vector<DyadicInterval>> sampled;  // rectangles, one interval per axis
};

// Sample dyadic hyper-rectangles each with probability q; the output cell is
// 1 iff no sampled rectangle covers it.
DyadicOutcome dyadic_construction(const DyadicParams& params);

// Random matrix at the given density, repaired to avoid p exactly by the
// same delete-until-clean loop as deletion_construction.
Tensor01 random_avoiding_matrix(const Shape& shape, const Tensor01& p, double density,
                                std::uint64_t seed);

}  // namespace matex
