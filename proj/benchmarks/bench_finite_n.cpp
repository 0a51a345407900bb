#include <benchmark/benchmark.h>

#include "genuskit/finite_n/jacobi.hpp"
#include "genuskit/finite_n/residuals.hpp"

namespace {

using genuskit::Potential;
using genuskit::ratio;

void BM_Stieltjes(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const unsigned digits = static_cast<unsigned>(state.range(1));
  const Potential pot = Potential::quartic(genuskit::Rational(1), ratio(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::stieltjes_recurrence(pot, N, -1, digits));
}
BENCHMARK(BM_Stieltjes)->Args({20, 50})->Args({40, 50})->Args({40, 100})->Unit(benchmark::kMillisecond);

void BM_ResolventCheck(benchmark::State& state) {
  const auto jd = genuskit::stieltjes_recurrence(Potential::quartic(genuskit::Rational(1), ratio(2, 3)), 40, -1, 50);
  for (auto _ : state) benchmark::DoNotOptimize(genuskit::resolvent_identity_check(jd, 3));
}
BENCHMARK(BM_ResolventCheck)->Unit(benchmark::kMillisecond);

}  // namespace
