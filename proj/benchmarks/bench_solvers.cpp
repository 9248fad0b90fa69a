#include <benchmark/benchmark.h>

#include "sgipsm/registry.hpp"
#include "sgipsm/solver.hpp"

namespace {

// Operators are built outside the timed loop; only the solve is measured.
void solve_example(benchmark::State& state, int id, double alpha) {
  const auto& ex = sgipsm::example(id);
  const auto ops = sgipsm::build_operators(sgipsm::BasisConfig(alpha, static_cast<int>(state.range(0))), ex.spec.b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgipsm::solve(ex.spec, ops));
  }
}

void BM_LinearA1(benchmark::State& state) { solve_example(state, 1, 0.1); }
BENCHMARK(BM_LinearA1)->RangeMultiplier(2)->Range(4, 128);

void BM_NonlinearA1(benchmark::State& state) { solve_example(state, 2, 0.8); }
BENCHMARK(BM_NonlinearA1)->RangeMultiplier(2)->Range(4, 128);

void BM_NonlinearA2(benchmark::State& state) { solve_example(state, 5, 0.9); }
BENCHMARK(BM_NonlinearA2)->RangeMultiplier(2)->Range(4, 128);

}  // namespace
