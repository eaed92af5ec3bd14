#include <benchmark/benchmark.h>

#include "matex/containment.hpp"
#include "matex/extremal.hpp"
#include "matex/patterns.hpp"
#include "matex/rng.hpp"

namespace {

void BM_Contains(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  matex::PatternSpec p = matex::identity_permutation(3, 2);
  matex::Tensor01 host = matex::random_avoiding_matrix(
      matex::Shape({n, n}), p.tensor, 0.3, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(matex::contains(host, p.tensor));
}
BENCHMARK(BM_Contains)->Arg(8)->Arg(12)->Arg(16);

void BM_IntervalMinor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  matex::Tensor01 target = matex::all_ones({2, 2}).tensor;
  matex::Tensor01 host = matex::random_avoiding_matrix(
      matex::Shape({n, n}), target, 0.2, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(matex::contains_interval_minor(host, target));
}
BENCHMARK(BM_IntervalMinor)->Arg(8)->Arg(12)->Arg(16);

void BM_SolveIdentity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  matex::SolveTask task;
  task.shape = matex::Shape({n, n});
  task.pattern = matex::identity_permutation(2, 2);
  for (auto _ : state) {
    matex::SolveResult r = matex::solve(task);
    benchmark::DoNotOptimize(r.optimum);
  }
}
BENCHMARK(BM_SolveIdentity)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
