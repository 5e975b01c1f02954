#include <benchmark/benchmark.h>

#include "flagcert/constructions.hpp"

using namespace flagcert;

static void BM_DensityCounts(benchmark::State& state) {
  const IsoClassTable& t = iso_table(4);
  Graph g = build_Bn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(density_counts(t, g));
}
BENCHMARK(BM_DensityCounts)->Arg(24)->Arg(48);

static void BM_DensityCountsSerial(benchmark::State& state) {
  const IsoClassTable& t = iso_table(4);
  Graph g = build_Bn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(density_counts_serial(t, g));
}
BENCHMARK(BM_DensityCountsSerial)->Arg(24)->Arg(48);

static void BM_FlagMatrix(benchmark::State& state) {
  FlagFamily f = main_family();
  Graph g = build_Bn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_matrix(f, g));
}
BENCHMARK(BM_FlagMatrix)->Arg(12)->Arg(24);

static void BM_FlagMatrixSerial(benchmark::State& state) {
  FlagFamily f = main_family();
  Graph g = build_Bn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(flag_matrix_serial(f, g));
}
BENCHMARK(BM_FlagMatrixSerial)->Arg(12)->Arg(24);

static void BM_BruteForceTau(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tau(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForceTau)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BruteForceTauSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tau_serial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForceTauSerial)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
