// Serial reference kernel against the OpenMP kernel.

#include <benchmark/benchmark.h>

#include "snakeforge/census.hpp"

namespace {

void BM_CensusSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(snakeforge::census_serial(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(snakeforge::factorial(n)));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const snakeforge::CensusOptions options{false, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(snakeforge::census_parallel(n, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(snakeforge::factorial(n)));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(snakeforge::census_serial(n, {true, 0}));
}

void BM_VerifyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const snakeforge::CensusOptions options{true, static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(snakeforge::census_parallel(n, options));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->ArgsProduct({{8, 9}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifySerial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->ArgsProduct({{6}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
