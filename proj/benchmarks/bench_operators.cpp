#include <benchmark/benchmark.h>

#include "sgipsm/integration.hpp"

namespace {

void BM_Nodes(benchmark::State& state) {
  const sgipsm::BasisConfig cfg(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgipsm::make_nodeset(cfg));
  }
}
BENCHMARK(BM_Nodes)->RangeMultiplier(2)->Range(4, 128);

void BM_Operators(benchmark::State& state) {
  const sgipsm::BasisConfig cfg(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgipsm::build_operators(cfg, 1.0));
  }
}
BENCHMARK(BM_Operators)->RangeMultiplier(2)->Range(4, 128);

void BM_Interpolate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ops = sgipsm::build_operators(sgipsm::BasisConfig(0.5, n), 1.0);
  const Eigen::VectorXd values = ops.shifted_nodeset.nodes.array().square();
  const sgipsm::Interpolator interp(ops.shifted_nodeset, values);
  double x = 0.0;
  for (auto _ : state) {
    x += 0.0137;
    if (x > 1.0) {
      x -= 1.0;
    }
    benchmark::DoNotOptimize(interp(x));
  }
}
BENCHMARK(BM_Interpolate)->RangeMultiplier(4)->Range(4, 64);

}  // namespace
