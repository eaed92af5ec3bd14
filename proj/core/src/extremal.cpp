#include "matex/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "matex/containment.hpp"

namespace matex {

std::string predicate_name(Predicate p) {
  return p == Predicate::containment ? "containment" : "interval-minor";
}

std::string objective_name(Objective o) {
  return o == Objective::total_ones ? "ones" : "heavy-rows";
}

long long heavy_row_count(const Tensor01& a, int s) {
  const int d = a.dim();
  long long n_lines = 1;
  for (int l = 2; l <= d; ++l) n_lines *= a.shape().extent(l);
  std::vector<long long> counts(n_lines, 0);
  const std::uint64_t cells = a.cells();
  const long long n1 = a.shape().extent(1);
  for (std::uint64_t off = 0; off < cells; ++off)
    if (a.get_at(off)) counts[off % (cells / n1)] += 1;
  long long heavy = 0;
  for (long long c : counts)
    if (c >= s) ++heavy;
  return heavy;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSolverCellCap = std::uint64_t{1} << 20;

struct Searcher {
  const SolveTask& task;
  const Tensor01& pat;
  Tensor01 a;
  std::uint64_t ncells;
  std::vector<Coord> coords;       // coordinate of each offset
  std::vector<long long> line_of;  // axis-1 line id of each offset

  long long incumbent = -1;
  Tensor01 best;
  bool improved = false;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  bool has_deadline = false;
  Clock::time_point deadline;

  // heavy-rows bookkeeping
  long long n_lines = 1;
  std::vector<long long> line_ones, line_undecided;
  long long heavy_now = 0, heavy_possible = 0;

  // canonical pass: stop at the first leaf matching `target`
  bool canonical_mode = false;
  long long target = 0;

  explicit Searcher(const SolveTask& t)
      : task(t), pat(t.pattern.tensor), a(t.shape), ncells(a.cells()) {
    coords.reserve(ncells);
    Coord c = first_coord(t.shape);
    do {
      coords.push_back(c);
    } while (next_coord(c, t.shape));

    const long long n1 = t.shape.extent(1);
    n_lines = static_cast<long long>(ncells) / n1;
    line_of.resize(ncells);
    for (std::uint64_t i = 0; i < ncells; ++i)
      line_of[i] = static_cast<long long>(i % (ncells / n1));

    line_ones.assign(n_lines, 0);
    line_undecided.assign(n_lines, n1);
    if (task.objective == Objective::heavy_rows) {
      for (long long j = 0; j < n_lines; ++j)
        if (line_undecided[j] >= task.heavy_threshold) ++heavy_possible;
    }
  }

  bool time_up() {
    if (!has_deadline) return false;
    if ((nodes & 255) == 0 && Clock::now() > deadline) budget_hit = true;
    return budget_hit;
  }

  long long value() const {
    return task.objective == Objective::total_ones ? a.ones_count() : heavy_now;
  }

  long long bound(std::uint64_t i) const {
    if (task.objective == Objective::total_ones)
      return a.ones_count() + static_cast<long long>(ncells - i);
    return heavy_now + heavy_possible;
  }

  bool line_is_heavy(long long j) const { return line_ones[j] >= task.heavy_threshold; }
  bool line_is_possible(long long j) const {
    return !line_is_heavy(j) && line_ones[j] + line_undecided[j] >= task.heavy_threshold;
  }

  void decide(long long j, bool one) {
    if (task.objective != Objective::heavy_rows) return;
    const bool was_heavy = line_is_heavy(j);
    const bool was_possible = line_is_possible(j);
    line_undecided[j] -= 1;
    if (one) line_ones[j] += 1;
    const bool now_heavy = line_is_heavy(j);
    const bool now_possible = line_is_possible(j);
    heavy_now += (now_heavy ? 1 : 0) - (was_heavy ? 1 : 0);
    heavy_possible += (now_possible ? 1 : 0) - (was_possible ? 1 : 0);
  }

  void undo(long long j, bool one) {
    if (task.objective != Objective::heavy_rows) return;
    const bool was_heavy = line_is_heavy(j);
    const bool was_possible = line_is_possible(j);
    line_undecided[j] += 1;
    if (one) line_ones[j] -= 1;
    const bool now_heavy = line_is_heavy(j);
    const bool now_possible = line_is_possible(j);
    heavy_now += (now_heavy ? 1 : 0) - (was_heavy ? 1 : 0);
    heavy_possible += (now_possible ? 1 : 0) - (was_possible ? 1 : 0);
  }

  bool legal_to_set(const Coord& c) {
    if (task.predicate == Predicate::containment)
      return !would_create_copy(a, pat, c);
    a.set(c, true);
    const bool bad = contains_interval_minor(a, pat);
    a.set(c, false);
    return !bad;
  }

  // Returns true in canonical mode once the target witness is found.
  bool dfs(std::uint64_t i) {
    ++nodes;
    if (time_up()) return false;
    if (i == ncells) {
      if (canonical_mode) {
        if (value() != target) return false;
        best = a;
        return true;
      }
      if (value() > incumbent) {
        incumbent = value();
        best = a;
        improved = true;
      }
      return false;
    }
    if (canonical_mode) {
      if (bound(i) < target) return false;
    } else {
      if (bound(i) <= incumbent) return false;
    }
    const Coord& c = coords[i];
    const long long j = line_of[i];

    const bool zero_first = canonical_mode;
    for (int pass = 0; pass < 2; ++pass) {
      const bool branch_one = (pass == 0) != zero_first;
      if (branch_one) {
        if (!legal_to_set(c)) continue;
        a.set(c, true);
        decide(j, true);
        const bool done = dfs(i + 1);
        undo(j, true);
        a.set(c, false);
        if (done) return true;
      } else {
        decide(j, false);
        const bool done = dfs(i + 1);
        undo(j, false);
        if (done) return true;
      }
      if (budget_hit) return false;
    }
    return false;
  }
};

bool avoids_under(const Tensor01& a, const Tensor01& pat, Predicate pred) {
  return pred == Predicate::containment ? !contains(a, pat)
                                        : !contains_interval_minor(a, pat);
}

}  // namespace

Tensor01 lower_bound_seed(const SolveTask& task) {
  const Tensor01& pat = task.pattern.tensor;
  if (pat.ones_count() < 2)
    throw std::invalid_argument("lower_bound_seed: pattern needs at least two ones");
  if (pat.dim() != task.shape.dim())
    throw std::invalid_argument("lower_bound_seed: dimension mismatch");
  const int d = task.shape.dim();

  // an axis on which two pattern ones differ; a single cross section there
  // cannot host the pattern
  int axis = 0;
  const auto pones = pat.ones();
  for (int l = 1; l <= d && axis == 0; ++l)
    for (std::size_t i = 1; i < pones.size(); ++i)
      if (pones[i][l - 1] != pones[0][l - 1]) {
        axis = l;
        break;
      }
  Tensor01 seed{task.shape};
  Coord c = first_coord(task.shape);
  do {
    if (c[axis - 1] == 1) seed.set(c, true);
  } while (next_coord(c, task.shape));
  if (!avoids_under(seed, pat, task.predicate))
    throw std::logic_error("lower_bound_seed: cross-section seed fails avoidance");

  // corner construction beats n^{d-1} for permutation patterns on cubes
  if (task.predicate == Predicate::containment &&
      task.pattern.kind == PatternKind::permutation) {
    bool cubic = true;
    for (int l = 2; l <= d; ++l)
      if (task.shape.extent(l) != task.shape.extent(1)) cubic = false;
    const int n = task.shape.extent(1);
    const int k = pat.shape().extent(1);
    if (cubic && n >= k - 1) {
      ConstructionReport rep = corner_construction(task.pattern, n);
      if (rep.avoided && rep.ones > seed.ones_count()) return rep.output;
    }
  }
  return seed;
}

SolveResult solve(const SolveTask& task) {
  const Tensor01& pat = task.pattern.tensor;
  if (pat.ones_count() == 0)
    throw std::invalid_argument("solve: pattern has no ones");
  if (pat.dim() != task.shape.dim())
    throw std::invalid_argument("solve: dimension mismatch");
  if (task.shape.cells() > kSolverCellCap)
    throw std::invalid_argument("solve: shape exceeds the solver cell cap");
  if (task.objective == Objective::heavy_rows &&
      (task.heavy_threshold < 1 || task.heavy_threshold > task.shape.extent(1)))
    throw std::invalid_argument("solve: heavy-rows threshold out of range");

  const auto start = Clock::now();
  Searcher s(task);
  if (task.budget_seconds > 0) {
    s.has_deadline = true;
    s.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(task.budget_seconds));
  }

  // constructive incumbent
  s.best = Tensor01{task.shape};
  s.incumbent = task.objective == Objective::total_ones
                    ? 0
                    : heavy_row_count(s.best, task.heavy_threshold);
  if (pat.ones_count() >= 2) {
    Tensor01 seed = lower_bound_seed(task);
    const long long v = task.objective == Objective::total_ones
                            ? seed.ones_count()
                            : heavy_row_count(seed, task.heavy_threshold);
    if (v > s.incumbent) {
      s.incumbent = v;
      s.best = std::move(seed);
    }
  }

  s.dfs(0);

  SolveResult res;
  res.optimum = s.incumbent;
  res.proved_optimal = !s.budget_hit;
  res.nodes_explored = s.nodes;
  res.witness = s.best;

  if (res.proved_optimal && task.canonical_witness) {
    Searcher canon(task);
    canon.has_deadline = s.has_deadline;
    canon.deadline = s.deadline;
    canon.canonical_mode = true;
    canon.target = res.optimum;
    if (canon.dfs(0) && !canon.budget_hit) res.witness = canon.best;
    res.nodes_explored += canon.nodes;
  }

  // post-hoc re-verification, independent of the search path
  if (!avoids_under(res.witness, pat, task.predicate))
    throw std::logic_error("solve: witness fails the avoidance predicate");
  const long long v = task.objective == Objective::total_ones
                          ? res.witness.ones_count()
                          : heavy_row_count(res.witness, task.heavy_threshold);
  if (res.proved_optimal && v != res.optimum)
    throw std::logic_error("solve: witness objective does not match the optimum");

  res.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

FamilyResult solve_family_max(const std::vector<PatternSpec>& family, const Shape& shape,
                              Predicate predicate, Objective objective, int heavy_s,
                              double budget_seconds, int threads) {
  if (family.empty())
    throw std::invalid_argument("solve_family_max: family must be nonempty");
  FamilyResult out;
  out.members.resize(family.size());

  auto run_member = [&](std::size_t i) {
    SolveTask t;
    t.shape = shape;
    t.pattern = family[i];
    t.predicate = predicate;
    t.objective = objective;
    t.heavy_threshold = heavy_s;
    t.budget_seconds = budget_seconds;
    out.members[i] = solve(t);
  };

  if (threads <= 1 || family.size() == 1) {
    for (std::size_t i = 0; i < family.size(); ++i) run_member(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    const std::size_t workers = std::min<std::size_t>(threads, family.size());
    std::mutex mu;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mu);
            if (next >= out.members.size()) return;
            i = next++;
          }
          run_member(i);
        }
      });
    for (auto& th : pool) th.join();
  }

  out.all_proved = true;
  for (std::size_t i = 0; i < out.members.size(); ++i) {
    out.all_proved = out.all_proved && out.members[i].proved_optimal;
    if (i == 0 || out.members[i].optimum > out.optimum) {
      out.optimum = out.members[i].optimum;
      out.argmax = i;
    }
  }
  return out;
}

long long tuple_family_extremum(int n, int j, int k, int d, int threads) {
  const auto family = tuple_permutation_family(j, k, d);
  FamilyResult r = solve_family_max(family, Shape(std::vector<int>(d, n)),
                                    Predicate::containment, Objective::total_ones, 1, 0.0,
                                    threads);
  if (!r.all_proved)
    throw std::runtime_error("tuple_family_extremum: a member solve was not proved optimal");
  return r.optimum;
}

long long heavy_row_extremum(const std::vector<int>& k_vec, int n, int t, int s) {
  const int d = static_cast<int>(k_vec.size());
  if (t < 1 || n < 1 || s < 1)
    throw std::invalid_argument("heavy_row_extremum: t, n, s >= 1");
  std::vector<int> dims(d, n);
  dims[0] = t;
  if (s > t) return 0;  // no line can reach the threshold
  SolveTask task;
  task.shape = Shape(dims);
  task.pattern = all_ones(k_vec);
  task.predicate = Predicate::interval_minor;
  task.objective = Objective::heavy_rows;
  task.heavy_threshold = s;
  SolveResult r = solve(task);
  if (!r.proved_optimal)
    throw std::runtime_error("heavy_row_extremum: solve was not proved optimal");
  return r.optimum;
}

}  // namespace matex
