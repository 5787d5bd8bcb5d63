#include <benchmark/benchmark.h>

#include <cmath>

#include "critga/quasispecies.hpp"

namespace {

namespace qs = critga::quasispecies;

void BM_ClassMutationMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qs::class_mutation_matrix(n, 0.03));
}
BENCHMARK(BM_ClassMutationMatrix)->Arg(10)->Arg(30)->Arg(100);

void BM_Stationary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto model = qs::ClassModel::sharp_peak(n, 4.0, 0.5 * std::log(4.0) / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(qs::stationary_distribution(model));
}
BENCHMARK(BM_Stationary)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_DetectThreshold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qs::detect_error_threshold(n, 8.0, 1e-7));
}
BENCHMARK(BM_DetectThreshold)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
