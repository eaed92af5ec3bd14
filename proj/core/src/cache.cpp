#include "matex/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "matex/containment.hpp"
#include "matex/json_io.hpp"

namespace matex {

namespace {

constexpr const char* kToolVersion = "0.1.0";

nlohmann::json key_to_json(const CacheKey& k) {
  return {{"pattern_hash", k.pattern_hash},
          {"dims", k.dims},
          {"predicate", predicate_name(k.predicate)},
          {"objective", objective_name(k.objective)},
          {"threshold", k.threshold}};
}

CacheKey key_from_json(const nlohmann::json& j) {
  CacheKey k;
  k.pattern_hash = j.at("pattern_hash").get<std::uint64_t>();
  k.dims = j.at("dims").get<std::vector<int>>();
  std::string pred = j.at("predicate").get<std::string>();
  if (pred == predicate_name(Predicate::containment)) k.predicate = Predicate::containment;
  else if (pred == predicate_name(Predicate::interval_minor)) k.predicate = Predicate::interval_minor;
  else throw std::invalid_argument("cache: unknown predicate " + pred);
  std::string obj = j.at("objective").get<std::string>();
  if (obj == objective_name(Objective::total_ones)) k.objective = Objective::total_ones;
  else if (obj == objective_name(Objective::heavy_rows)) k.objective = Objective::heavy_rows;
  else throw std::invalid_argument("cache: unknown objective " + obj);
  k.threshold = j.at("threshold").get<int>();
  return k;
}

std::string record_to_line(const CacheRecord& r) {
  nlohmann::json j;
  j["key"] = key_to_json(r.key);
  j["optimum"] = r.optimum;
  j["pattern"] = nlohmann::json::parse(tensor_to_json(r.pattern));
  j["witness"] = nlohmann::json::parse(tensor_to_json(r.witness));
  j["proved_optimal"] = r.proved_optimal;
  j["tool_version"] = r.tool_version;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

CacheRecord record_from_line(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  CacheRecord r;
  r.key = key_from_json(j.at("key"));
  r.optimum = j.at("optimum").get<long long>();
  r.pattern = tensor_from_json(j.at("pattern").dump());
  r.witness = tensor_from_json(j.at("witness").dump());
  r.proved_optimal = j.at("proved_optimal").get<bool>();
  r.tool_version = j.value("tool_version", "");
  r.timestamp = j.value("timestamp", "");
  return r;
}

// the stored claim must hold on its own evidence before the record is served
bool record_verifies(const CacheRecord& r) {
  if (r.key.pattern_hash != fnv1a64(tensor_to_json(r.pattern))) return false;
  if (r.witness.shape().dims() != r.key.dims) return false;
  bool clean = r.key.predicate == Predicate::containment
                   ? !contains(r.witness, r.pattern)
                   : !contains_interval_minor(r.witness, r.pattern);
  if (!clean) return false;
  long long value = r.key.objective == Objective::total_ones
                        ? r.witness.ones_count()
                        : heavy_row_count(r.witness, r.key.threshold);
  return value == r.optimum;
}

}  // namespace

Cache::Cache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) throw std::invalid_argument("Cache: empty path");
}

std::string Cache::default_path() {
  if (const char* env = std::getenv("MATEX_CACHE"); env && *env) return env;
  return ".matex-cache.jsonl";
}

std::optional<CacheRecord> Cache::get(const CacheKey& key) {
  std::ifstream in(path_);
  if (!in.is_open()) return std::nullopt;

  std::vector<std::string> keep;
  std::optional<CacheRecord> best;
  bool evicted = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheRecord r;
    try {
      r = record_from_line(line);
    } catch (const std::exception&) {
      evicted = true;  // unparseable: drop it
      continue;
    }
    if (r.key == key) {
      if (!record_verifies(r)) {
        evicted = true;
        continue;
      }
      if (r.proved_optimal) best = r;  // newest wins
    }
    keep.push_back(line);
  }
  in.close();
  if (in.bad()) throw std::runtime_error("Cache: read error on " + path_);

  if (evicted) {
    std::ofstream out(path_, std::ios::trunc);
    if (!out.is_open()) throw std::runtime_error("Cache: cannot rewrite " + path_);
    for (const std::string& l : keep) out << l << '\n';
    if (!out.good()) throw std::runtime_error("Cache: write error on " + path_);
  }
  return best;
}

void Cache::put(const CacheRecord& record) {
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open()) throw std::runtime_error("Cache: cannot open " + path_);
  out << record_to_line(record) << '\n';
  if (!out.good()) throw std::runtime_error("Cache: write error on " + path_);
}

std::size_t Cache::size() const {
  std::ifstream in(path_);
  if (!in.is_open()) return 0;
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      record_from_line(line);
      ++n;
    } catch (const std::exception&) {
    }
  }
  return n;
}

void Cache::clear() {
  std::ofstream out(path_, std::ios::trunc);
  if (!out.is_open()) throw std::runtime_error("Cache: cannot open " + path_);
}

CacheKey make_cache_key(const SolveTask& task) {
  CacheKey k;
  k.pattern_hash = fnv1a64(tensor_to_json(task.pattern.tensor));
  k.dims = task.shape.dims();
  k.predicate = task.predicate;
  k.objective = task.objective;
  k.threshold = task.objective == Objective::heavy_rows ? task.heavy_threshold : 1;
  return k;
}

CacheRecord make_cache_record(const SolveTask& task, const SolveResult& result,
                              bool with_timestamp) {
  CacheRecord r;
  r.key = make_cache_key(task);
  r.optimum = result.optimum;
  r.pattern = task.pattern.tensor;
  r.witness = result.witness;
  r.proved_optimal = result.proved_optimal;
  r.tool_version = kToolVersion;
  if (with_timestamp) {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    r.timestamp = buf;
  }
  return r;
}

}  // namespace matex
