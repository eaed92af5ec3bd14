// matex: exact pattern-avoidance computations for d-dimensional 0-1 matrices.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matex/bounds.hpp"
#include "matex/cache.hpp"
#include "matex/containment.hpp"
#include "matex/extremal.hpp"
#include "matex/json_io.hpp"
#include "matex/patterns.hpp"
#include "matex/structure.hpp"
#include "matex/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContains = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out.is_open()) throw std::runtime_error("cannot open output file " + out_path);
  out << text << '\n';
  if (!out.good()) throw std::runtime_error("write error on " + out_path);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct SolveArgs {
  std::string pattern_path;
  int n = 0;
  std::vector<int> dims;
  std::string predicate = "containment";
  std::string objective = "ones";
  int s = 1;
  double budget = 0.0;
  std::string emit_format = "json";
  std::string out_path;
  std::string cache_path;
  bool no_cache = false;
  bool no_timestamp = false;
  int threads = 1;
};

matex::SolveTask build_task(const SolveArgs& a) {
  matex::Tensor01 pat = matex::load_tensor(a.pattern_path);
  matex::SolveTask task;
  task.pattern = matex::classify_pattern(pat);
  if (!a.dims.empty())
    task.shape = matex::Shape(a.dims);
  else if (a.n > 0)
    task.shape = matex::Shape(std::vector<int>(pat.dim(), a.n));
  else
    throw std::invalid_argument("solve: pass --n or --dims");
  if (a.predicate == "containment")
    task.predicate = matex::Predicate::containment;
  else if (a.predicate == "interval-minor")
    task.predicate = matex::Predicate::interval_minor;
  else
    throw std::invalid_argument("unknown predicate " + a.predicate);
  if (a.objective == "ones")
    task.objective = matex::Objective::total_ones;
  else if (a.objective == "heavy-rows")
    task.objective = matex::Objective::heavy_rows;
  else
    throw std::invalid_argument("unknown objective " + a.objective);
  task.heavy_threshold = a.s;
  task.budget_seconds = a.budget;
  return task;
}

int run_solve(const SolveArgs& a) {
  matex::SolveTask task = build_task(a);
  matex::Cache cache(a.cache_path.empty() ? matex::Cache::default_path() : a.cache_path);
  matex::CacheKey key = matex::make_cache_key(task);

  matex::SolveResult result;
  bool from_cache = false;
  if (!a.no_cache) {
    if (auto hit = cache.get(key)) {
      result.optimum = hit->optimum;
      result.witness = hit->witness;
      result.proved_optimal = true;
      from_cache = true;
    }
  }
  if (!from_cache) {
    result = matex::solve(task);
    if (!a.no_cache && result.proved_optimal)
      cache.put(matex::make_cache_record(task, result, !a.no_timestamp));
  }

  nlohmann::json j;
  j["optimum"] = result.optimum;
  j["proved_optimal"] = result.proved_optimal;
  j["witness"] = nlohmann::json::parse(matex::tensor_to_json(result.witness));
  j["predicate"] = matex::predicate_name(task.predicate);
  j["objective"] = matex::objective_name(task.objective);
  j["provenance"] = result.proved_optimal ? "exact-solver" : "measured";
  j["from_cache"] = from_cache;
  if (!from_cache) {
    j["nodes"] = result.nodes_explored;
    if (!a.no_timestamp) j["wall_time"] = result.wall_time;
  }

  if (a.emit_format == "csv") {
    std::string csv = "optimum,proved_optimal,from_cache\n" + std::to_string(result.optimum) +
                      "," + (result.proved_optimal ? "true" : "false") + "," +
                      (from_cache ? "true" : "false");
    emit(csv, a.out_path);
  } else {
    emit(j.dump(), a.out_path);
  }
  return result.proved_optimal ? kExitOk : kExitBudget;
}

int run_sweep(const std::string& pattern_path, int n_max, const std::string& format,
              const std::string& out_path, double budget) {
  matex::PatternSpec p = matex::classify_pattern(matex::load_tensor(pattern_path));
  const int d = p.tensor.dim();
  matex::LimitEstimate est = matex::limit_sequence(p, d, n_max, budget);
  if (format == "csv") {
    std::string csv = "n,f,f_over_n_pow,f_over_n_pow_float\n";
    for (const auto& s : est.samples) {
      csv += std::to_string(s.n) + "," + std::to_string(s.f) + "," + s.ratio.str() + "," +
             std::to_string(s.ratio.value()) + "\n";
    }
    if (!csv.empty()) csv.pop_back();
    emit(csv, out_path);
  } else {
    emit(est.to_json(), out_path);
  }
  return est.omitted.empty() ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal computations for pattern-avoiding 0-1 matrices"};
  app.require_subcommand(1);

  // solve
  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "maximize ones or heavy rows avoiding a pattern");
  solve_cmd->add_option("--pattern", sa.pattern_path, "pattern JSON file")->required();
  solve_cmd->add_option("--n", sa.n, "cubic host edge");
  solve_cmd->add_option("--dims", sa.dims, "explicit host extents");
  solve_cmd->add_option("--predicate", sa.predicate, "containment | interval-minor");
  solve_cmd->add_option("--objective", sa.objective, "ones | heavy-rows");
  solve_cmd->add_option("--s", sa.s, "heavy-row threshold");
  solve_cmd->add_option("--budget", sa.budget, "wall-clock budget in seconds (0 = unlimited)");
  solve_cmd->add_option("--emit", sa.emit_format, "json | csv");
  solve_cmd->add_option("--out", sa.out_path, "output path (default stdout)");
  solve_cmd->add_option("--cache", sa.cache_path, "cache file override");
  solve_cmd->add_flag("--no-cache", sa.no_cache, "skip the result cache");
  solve_cmd->add_flag("--no-timestamp", sa.no_timestamp, "omit timestamps for reproducible output");
  solve_cmd->add_option("--threads", sa.threads, "solver threads (family tasks only)");

  // check
  std::string check_a, check_p, check_out;
  bool check_minor = false, check_witness = false;
  auto* check_cmd = app.add_subcommand("check", "does A contain P?");
  check_cmd->add_option("--a", check_a, "host JSON file")->required();
  check_cmd->add_option("--p", check_p, "pattern JSON file")->required();
  check_cmd->add_flag("--interval-minor", check_minor, "use interval-minor containment");
  check_cmd->add_flag("--witness", check_witness, "report the embedding or intervals");
  check_cmd->add_option("--out", check_out, "output path (default stdout)");

  // construct
  std::string con_type = "corner", con_pattern, con_out;
  std::vector<int> con_kvec;
  int con_n = 0, con_r = 1, con_d = 2;
  std::uint64_t con_seed = 0;
  bool con_no_ts = false;
  auto* con_cmd = app.add_subcommand("construct", "build an avoiding matrix");
  con_cmd->add_option("--type", con_type, "corner | deletion | dyadic")->required();
  con_cmd->add_option("--pattern", con_pattern, "generator permutation JSON (corner)");
  con_cmd->add_option("--k-vec", con_kvec, "target all-ones extents (deletion)");
  con_cmd->add_option("--n", con_n, "host edge");
  con_cmd->add_option("--r", con_r, "dyadic covering multiplicity parameter");
  con_cmd->add_option("--d", con_d, "dimension (dyadic)");
  con_cmd->add_option("--seed", con_seed, "random seed");
  con_cmd->add_flag("--no-timestamp", con_no_ts, "reserved; reports carry no timestamps");
  con_cmd->add_option("--out", con_out, "output path (default stdout)");

  // audit
  std::string audit_a, audit_p, audit_out;
  int audit_k = 2;
  auto* audit_cmd = app.add_subcommand("audit", "chunk-count audit of an avoiding host");
  audit_cmd->add_option("--a", audit_a, "host JSON file")->required();
  audit_cmd->add_option("--p", audit_p, "double permutation JSON file")->required();
  audit_cmd->add_option("--k", audit_k, "block edge")->required();
  audit_cmd->add_option("--out", audit_out, "output path (default stdout)");

  // verify
  std::string ver_lemma, ver_out;
  int ver_trials = 50;
  std::uint64_t ver_seed = 0;
  auto* ver_cmd = app.add_subcommand("verify", "randomized lemma spot checks");
  ver_cmd->add_option("--lemma", ver_lemma, "Q | counts | homo | liminf | heavy-recursion | corner | deletion")
      ->required();
  ver_cmd->add_option("--trials", ver_trials, "number of trials");
  ver_cmd->add_option("--seed", ver_seed, "random seed");
  ver_cmd->add_option("--out", ver_out, "output path (default stdout)");

  // sweep
  std::string sweep_pattern, sweep_emit = "csv", sweep_out;
  int sweep_nmax = 4;
  double sweep_budget = 0.0;
  auto* sweep_cmd = app.add_subcommand("sweep", "f(n) for n = 1..n_max");
  sweep_cmd->add_option("--pattern", sweep_pattern, "pattern JSON file")->required();
  sweep_cmd->add_option("--n-max", sweep_nmax, "largest host edge")->required();
  sweep_cmd->add_option("--emit", sweep_emit, "csv | json");
  sweep_cmd->add_option("--budget", sweep_budget, "per-n budget in seconds");
  sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");

  // cache
  std::string cache_path_opt;
  auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the result cache");
  cache_cmd->add_option("--path", cache_path_opt, "cache file override");
  auto* cache_stats = cache_cmd->add_subcommand("stats", "record count");
  auto* cache_clear = cache_cmd->add_subcommand("clear", "drop all records");
  cache_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve_cmd) return run_solve(sa);

    if (*check_cmd) {
      matex::Tensor01 a = matex::load_tensor(check_a);
      matex::Tensor01 p = matex::load_tensor(check_p);
      nlohmann::json j;
      bool found;
      if (check_minor) {
        matex::IntervalSystem sys;
        found = matex::contains_interval_minor(a, p, check_witness ? &sys : nullptr);
        j["predicate"] = "interval-minor";
        if (found && check_witness) {
          auto arr = nlohmann::json::array();
          for (const auto& axis : sys.intervals) {
            auto ax = nlohmann::json::array();
            for (const auto& [lo, hi] : axis) ax.push_back({{"start", lo}, {"end", hi}});
            arr.push_back(std::move(ax));
          }
          j["intervals"] = std::move(arr);
        }
      } else {
        matex::Embedding emb;
        found = matex::contains(a, p, check_witness ? &emb : nullptr);
        j["predicate"] = "containment";
        if (found && check_witness) j["axis_maps"] = emb.axis_maps;
      }
      j["contains"] = found;
      emit(j.dump(), check_out);
      return found ? kExitContains : kExitOk;
    }

    if (*con_cmd) {
      if (con_type == "corner") {
        if (con_pattern.empty() || con_n <= 0)
          throw std::invalid_argument("construct corner: pass --pattern and --n");
        matex::PatternSpec p = matex::classify_pattern(matex::load_tensor(con_pattern));
        emit(matex::corner_construction(p, con_n).to_json(), con_out);
      } else if (con_type == "deletion") {
        if (con_kvec.empty() || con_n <= 0)
          throw std::invalid_argument("construct deletion: pass --k-vec and --n");
        emit(matex::deletion_construction(con_kvec, con_n, con_seed).to_json(), con_out);
      } else if (con_type == "dyadic") {
        matex::DyadicParams params = matex::DyadicParams::paper(con_r, con_d, con_seed);
        emit(matex::dyadic_construction(params).report.to_json(), con_out);
      } else {
        throw std::invalid_argument("unknown construction type " + con_type);
      }
      return kExitOk;
    }

    if (*audit_cmd) {
      matex::Tensor01 a = matex::load_tensor(audit_a);
      matex::PatternSpec p = matex::classify_pattern(matex::load_tensor(audit_p));
      emit(matex::audit_lemma_counts(a, p, audit_k).to_json(), audit_out);
      return kExitOk;
    }

    if (*ver_cmd) {
      matex::VerifyOutcome out = matex::verify_lemma(ver_lemma, ver_trials, ver_seed);
      emit(out.to_json(), ver_out);
      return kExitOk;
    }

    if (*sweep_cmd) return run_sweep(sweep_pattern, sweep_nmax, sweep_emit, sweep_out, sweep_budget);

    if (*cache_cmd) {
      matex::Cache cache(cache_path_opt.empty() ? matex::Cache::default_path()
                                                : cache_path_opt);
      if (*cache_stats) {
        nlohmann::json j;
        j["path"] = cache.path();
        j["records"] = cache.size();
        std::cout << j.dump() << '\n';
      } else if (*cache_clear) {
        cache.clear();
      }
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
