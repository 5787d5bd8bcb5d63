#include <benchmark/benchmark.h>

#include "critga/controller.hpp"
#include "critga/operators.hpp"

namespace {

using namespace critga;

void BM_GenerationStep(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto l = FitnessLandscape::deceptive_trap(64, 4);
  GAParams params;
  params.mutation_rate = 1.0 / 64;
  Rng rng(1);
  Population p = init_population(m, l, rng);
  for (auto _ : state) {
    StepResult step = generation_step(p, params, l, rng);
    p = std::move(step.population);
    benchmark::DoNotOptimize(step.record.best_fitness);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_GenerationStep)->RangeMultiplier(4)->Range(16, 1024);

void BM_Mutate(benchmark::State& state) {
  const double rate = 1.0 / static_cast<double>(state.range(0));
  const auto l = FitnessLandscape::sharp_peak(64, 2.0);
  Rng rng(2);
  const Population p = init_population(256, l, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mutate(p, rate, l, rng));
}
BENCHMARK(BM_Mutate)->Arg(2)->Arg(64)->Arg(1024);

void BM_ControlledRun(benchmark::State& state) {
  const auto kind = static_cast<ControllerKind>(state.range(0));
  const auto l = FitnessLandscape::deceptive_trap(16, 4);
  RunOptions options;
  options.budget = 500;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_controlled_ga(kind, l, GAParams{}, SizePolicy{}, options, seed++));
  }
}
BENCHMARK(BM_ControlledRun)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
