#include <gtest/gtest.h>

#include "genuskit/errors.hpp"
#include "genuskit/finite_n/jacobi.hpp"
#include "genuskit/finite_n/residuals.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {
namespace {

const JacobiData& quartic20() {
  static const JacobiData jd = stieltjes_recurrence(Potential::quartic(Rational(1), ratio(2, 3)), 20, -1, 40);
  return jd;
}

TEST(Stieltjes, GaussianIsExact) {
  // exp(-N x^2): r_n = n / (2N), h_0 = sqrt(pi / N).
  const int N = 8;
  const JacobiData jd = stieltjes_recurrence(Potential::gaussian(), N, -1, 40);
  const mpfr_prec_t bits = jd.r[1].bits();
  EXPECT_EQ(jd.n_max, N + 2);
  for (int n = 1; n <= jd.n_max; ++n) {
    EXPECT_LT(abs(jd.r[n] - Real(ratio(n, 2 * N), bits)).log10_abs(), -38) << n;
  }
  const Real h0 = sqrt(Real::pi(bits) / Real(N, bits));
  EXPECT_LT(abs(jd.h[0] - h0).log10_abs(), -38);
  for (const Real& s : jd.s) EXPECT_TRUE(s.is_zero());
  EXPECT_LT(jd.orthogonality_defect.log10_abs(), -35);
}

TEST(Stieltjes, RejectsBadInput) {
  EXPECT_THROW(stieltjes_recurrence(Potential::symbolic(2), 10), DomainError);
  EXPECT_THROW(stieltjes_recurrence(Potential::gaussian(), 0), DomainError);
  EXPECT_THROW(stieltjes_recurrence(Potential::gaussian(), 10, -1, 20), DomainError);
}

TEST(Residuals, StringEquationHolds) {
  const ResidualReport r = string_residual(quartic20());
  EXPECT_LT(r.max_residual.log10_abs(), -30);
  EXPECT_EQ(r.n.front(), 1);
}

TEST(Residuals, PerturbationSpikesLocally) {
  JacobiData jd = quartic20();
  jd.r[5] += Real(ratio(1, 1000000), jd.r[5].bits());
  const ResidualReport r = string_residual(jd);
  for (std::size_t i = 0; i < r.n.size(); ++i) {
    const bool touched = r.n[i] >= 4 && r.n[i] <= 6;
    if (touched) {
      EXPECT_GT(r.residual[i].log10_abs(), -8) << r.n[i];
    } else {
      EXPECT_LT(r.residual[i].log10_abs(), -30) << r.n[i];
    }
  }
}

TEST(Residuals, SixticSpikeIsWider) {
  JacobiData jd = stieltjes_recurrence(Potential::sixtic(Rational(1), Rational(1), Rational(1)), 12, -1, 40);
  jd.r[5] += Real(ratio(1, 1000000), jd.r[5].bits());
  const ResidualReport r = string_residual(jd);
  for (std::size_t i = 0; i < r.n.size(); ++i) {
    const bool touched = r.n[i] >= 3 && r.n[i] <= 7;
    EXPECT_EQ(r.residual[i].log10_abs() > -8, touched) << r.n[i];
  }
}

TEST(Residuals, LaxElements) {
  const JacobiData& jd = quartic20();
  EXPECT_EQ(lax_element(jd, 1, 6, 5), jd.r[6]);
  const Real d = lax_element(jd, 2, 6, 6) - (jd.r[6] + jd.r[7]);
  EXPECT_LT(d.log10_abs(), -35);
  EXPECT_TRUE(lax_element(jd, 2, 6, 5).is_zero());
}

TEST(Residuals, ResolventIdentities) {
  const ResolventReport rr = resolvent_identity_check(quartic20(), 3);
  EXPECT_EQ(rr.quadratic.n.size(), 3u);
  EXPECT_LT(rr.quadratic.max_residual.log10_abs(), -30);
  EXPECT_LT(rr.linear.max_residual.log10_abs(), -30);
  EXPECT_THROW(resolvent_identity_check(quartic20(), 30), TruncationError);
}

TEST(Decay, FitOnSyntheticData) {
  const mpfr_prec_t bits = digits_to_bits(30);
  const DecayFit f = fit_decay({10, 20, 40},
                               {Real(ratio(3, 10000), bits), Real(ratio(3, 160000), bits), Real(ratio(3, 2560000), bits)},
                               30);
  ASSERT_EQ(f.exponents.size(), 2u);
  EXPECT_NEAR(f.exponents[0], 4.0, 1e-12);
  EXPECT_NEAR(f.exponents[1], 4.0, 1e-12);
  EXPECT_NEAR(f.spread, 0.0, 1e-12);
  EXPECT_FALSE(f.precision_limited);
}

TEST(Decay, AsymptoticLeadingOrder) {
  const Potential pot = Potential::quartic(Rational(1), ratio(2, 3));
  std::vector<JacobiData> data{quartic20(), stieltjes_recurrence(pot, 40, -1, 40)};
  const RkExpansion rk = solve_rk(build_W(pot), 1, JetMode::concrete);
  const DecayFit f = asymptotic_compare(data, rk, 0);
  EXPECT_NEAR(f.exponents.at(0), 2.0, 0.3);
}

TEST(FreeEnergy, GaussianDifferenceVanishes) {
  const JacobiData jd = stieltjes_recurrence(Potential::gaussian(), 10, -1, 40);
  const FreeEnergyReport fe = free_energy_biz(jd, 3);
  EXPECT_LT(fe.difference.log10_abs(), -35);
  for (const Real& p : fe.partial_sums) EXPECT_LT(p.log10_abs(), -35);
}

TEST(FreeEnergy, QuarticDeviationsShrinkWithOrder) {
  const FreeEnergyReport fe = free_energy_biz(quartic20(), 3);
  ASSERT_EQ(fe.deviations.size(), 4u);
  for (int K = 0; K < 3; ++K) EXPECT_LT(fe.deviations[K + 1], fe.deviations[K]) << K;
}

}  // namespace
}  // namespace genuskit
