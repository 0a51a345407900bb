#include <gtest/gtest.h>

#include <random>

#include "genuskit/counting/counting.hpp"
#include "genuskit/counting/wick.hpp"
#include "genuskit/string/hodograph.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {
namespace {

TEST(PipelineProperties, DeriveTIsADerivation) {
  // Headroom in W symbols for the extra derivatives taken below.
  const RkExpansion rk = solve_rk(generic_context(5, true), 2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const JetExpr a = rk.r[pick(rng)] * Rational(c(rng)) + rk.r[pick(rng)].derive_T();
    const JetExpr b = rk.r[pick(rng)] + rk.r[0] * rk.r[pick(rng)] * Rational(c(rng));
    EXPECT_EQ((a * b).derive_T(), a.derive_T() * b + a * b.derive_T());
    EXPECT_EQ(a.derive_T(2), a.derive_T().derive_T());
  }
}

TEST(PipelineProperties, HodographRootsSolveW) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Potential pot = Potential::sixtic(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)), ratio(num(rng), den(rng)));
    const WFunction w = build_W(pot);
    const Rational T = ratio(num(rng), den(rng));
    const HodographRoot h = hodograph_root(w, T, 40);
    ASSERT_TRUE(h.unique());
    const Real r0 = h.value();
    const Real residual = w.as_upoly()(r0) - Real(T, r0.bits());
    EXPECT_LT(residual.log10_abs(), -36);
  }
}

TEST(PipelineProperties, LargerCapsKeepEntries) {
  const KappaTable small = count_maps({2, 4}, {2, 2}, 3, 2);
  const KappaTable large = count_maps({2, 4}, {3, 3}, 5, 2);
  for (const auto& n : small.vectors()) {
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(small.at(k, n), large.at(k, n));
  }
}

TEST(PipelineProperties, RandomVectorsAgreeWithWick) {
  std::mt19937_64 rng(13);
  const std::vector<int> valences{2, 4, 6};
  const KappaTable t = count_maps(valences, {4, 3, 2}, 5, 4);
  std::uniform_int_distribution<int> a(0, 4), b(0, 3), c(0, 2);
  int checked = 0;
  while (checked < 12) {
    const std::vector<int> n{a(rng), b(rng), c(rng)};
    const int half_edges = 2 * n[0] + 4 * n[1] + 6 * n[2];
    if (half_edges == 0 || half_edges > 14 || n[0] + n[1] + n[2] > 5) continue;
    const auto wick = wick_oracle(valences, n);
    for (int k = 0; k <= 4; ++k) {
      const auto it = wick.find(k);
      EXPECT_EQ(t.at(k, n), it == wick.end() ? Integer(0) : it->second);
    }
    ++checked;
  }
}

}  // namespace
}  // namespace genuskit
