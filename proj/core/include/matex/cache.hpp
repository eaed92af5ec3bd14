#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matex/extremal.hpp"
#include "matex/tensor.hpp"

namespace matex {

struct CacheKey {
  std::uint64_t pattern_hash = 0;
  std::vector<int> dims;
  Predicate predicate = Predicate::containment;
  Objective objective = Objective::total_ones;
  int threshold = 1;  // heavy-rows s; ignored for the ones objective

  bool operator==(const CacheKey&) const = default;
};

struct CacheRecord {
  CacheKey key;
  long long optimum = 0;
  Tensor01 pattern;
  Tensor01 witness;
  bool proved_optimal = false;
  std::string tool_version;
  std::string timestamp;
};

// Append-only JSONL store. get() returns the newest proved-optimal record for
// the key after re-verifying its witness; records that fail to parse or to
// verify are evicted from the file rather than served.
class Cache {
 public:
  explicit Cache(std::string path);

  // MATEX_CACHE when set, else .matex-cache.jsonl in the working directory.
  static std::string default_path();

  std::optional<CacheRecord> get(const CacheKey& key);
  void put(const CacheRecord& record);

  std::size_t size() const;  // parseable records currently on disk
  void clear();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

CacheKey make_cache_key(const SolveTask& task);
CacheRecord make_cache_record(const SolveTask& task, const SolveResult& result,
                              bool with_timestamp = true);

}  // namespace matex
