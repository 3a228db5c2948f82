#include <benchmark/benchmark.h>

#include "unibound/suite.hpp"

namespace {

unibound::TrialConfig bench_config(benchmark::State& state) {
  unibound::TrialConfig c;
  c.master_seed = 1;
  c.n_trials = static_cast<int>(state.range(0));
  return c;
}

void BM_SuiteSerial(benchmark::State& state) {
  const auto config = bench_config(state);
  for (auto _ : state) benchmark::DoNotOptimize(unibound::run_suite_serial(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuiteParallel(benchmark::State& state) {
  const auto config = bench_config(state);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(unibound::run_suite(config, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Compare(benchmark::State& state) {
  const auto config = bench_config(state);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(unibound::run_compare(config, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)
    ->ArgsProduct({{1000, 10000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Compare)->ArgsProduct({{10000}, {1, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
