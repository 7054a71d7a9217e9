#include <benchmark/benchmark.h>

#include "udecide/estimators.hpp"
#include "udecide/montecarlo.hpp"
#include "udecide/rng.hpp"

namespace {

using namespace udecide;

void BM_BetaDraw(benchmark::State& state) {
  RngStream rng(42, 0, 0);
  const double sigma = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_p_hat(0.2, sigma, ProbFamily::beta, rng));
  }
}
BENCHMARK(BM_BetaDraw)->Arg(5)->Arg(30);

void BM_UniformCostDraw(benchmark::State& state) {
  RngStream rng(42, 1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_cost_hat(0.3, 0.1, CostFamily::uniform_truncated, rng));
  }
}
BENCHMARK(BM_UniformCostDraw);

void BM_Simulate(benchmark::State& state) {
  NoiseSpec noise;
  noise.sigma_p0 = noise.sigma_c01 = noise.sigma_c10 = 0.1;
  noise.family_p = ProbFamily::beta;
  noise.family_c = CostFamily::uniform_truncated;
  noise.delta_mode = state.range(0) != 0;
  const SimulationConfig cfg{DecisionProblem(0.2, 0.3, 0.5), noise, 100'000, 42, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(cfg, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.trials));
}
BENCHMARK(BM_Simulate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
