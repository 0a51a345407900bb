#include <benchmark/benchmark.h>

#include "genuskit/energy/certificate.hpp"
#include "genuskit/string/rk.hpp"
#include "genuskit/string/u_table.hpp"

namespace {

void BM_UTable(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::derive_u_table(kmax));
}
BENCHMARK(BM_UTable)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_TripleScalingTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::derive_triple_scaling_table(6));
}
BENCHMARK(BM_TripleScalingTable)->Unit(benchmark::kMillisecond);

void BM_GenericRk(benchmark::State& state) {
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(genuskit::solve_rk(genuskit::generic_context(kmax, false), kmax));
  }
}
BENCHMARK(BM_GenericRk)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CertificateF3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::verify_total_derivative(3));
}
BENCHMARK(BM_CertificateF3)->Unit(benchmark::kMillisecond);

}  // namespace
