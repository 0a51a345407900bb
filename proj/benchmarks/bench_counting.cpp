#include <benchmark/benchmark.h>

#include "genuskit/counting/counting.hpp"
#include "genuskit/counting/wick.hpp"

namespace {

using genuskit::count_maps;

void BM_CountQuartic(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_maps({2, 4}, {cap, cap}, 2 * cap, 2));
  }
}
BENCHMARK(BM_CountQuartic)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_CountSixticGenus4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_maps({2, 4, 6}, {3, 3, 3}, 9, 4));
}
BENCHMARK(BM_CountSixticGenus4)->Unit(benchmark::kMillisecond);

void BM_WickOracle(benchmark::State& state) {
  const int n4 = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::wick_oracle({4}, {n4}));
}
BENCHMARK(BM_WickOracle)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
