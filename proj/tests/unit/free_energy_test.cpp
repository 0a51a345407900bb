#include <gtest/gtest.h>

#include "genuskit/algebra/parse.hpp"
#include "genuskit/energy/certificate.hpp"
#include "genuskit/energy/closed_form.hpp"
#include "genuskit/energy/f_series.hpp"
#include "genuskit/energy/specialize.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/string/hodograph.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {
namespace {

TEST(Certificate, GenericClosedFormsIntegrateTheirIntegrands) {
  for (int k = 1; k <= 3; ++k) {
    const Certificate c = verify_total_derivative(k);
    EXPECT_TRUE(c.holds) << c.to_string();
    EXPECT_TRUE(c.residual.is_zero());
    EXPECT_TRUE(c.vanishes_at_zero);
  }
}

TEST(Certificate, CompetingF3CoefficientFails) {
  const XiIntegrand R = generic_xi_integrand(3);
  EXPECT_TRUE(verify_total_derivative(generic_closed_form_F3(Rational(300)), R).holds);
  const Certificate bad = verify_total_derivative(generic_closed_form_F3(Rational(388)), R);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.residual.is_zero());
}

TEST(Certificate, PrintedLowOrderForms) {
  for (int k = 1; k <= 2; ++k) {
    EXPECT_TRUE(verify_printed_antiderivative(k).holds) << k;
    EXPECT_TRUE(printed_integrand_matches(k)) << k;
  }
}

TEST(FSeries, WeightGrading) {
  // Each W symbol weighs +1 and delta -1; f_k has weight -2k.
  const RkExpansion rk = solve_rk(generic_context(3, true), 3);
  const FIntegrandSeries f = assemble_f(rk, 3);
  const RingPtr& ring = f.context->ring();
  for (int k = 0; k <= 3; ++k) {
    for (const auto& [m, c] : f.f[k].poly().terms()) {
      int w = -m[f.context->delta_index()];
      for (std::size_t i = 3; i < ring->size(); ++i) w += m[i];
      EXPECT_EQ(w, -2 * k) << "f_" << k;
    }
  }
}

TEST(FSeries, GaussianF0) {
  const RkExpansion rk = solve_deformed_rk(build_W(Potential::gaussian()), 2);
  const FIntegrandSeries f = assemble_f(rk, 2);
  const RingPtr& ring = f.context->ring();
  EXPECT_EQ(f.f[0].poly(), parse_poly(ring, "2*xi^2 - 1/2*t^-2"));
  EXPECT_TRUE(f.f[1].is_zero());
  EXPECT_TRUE(f.f[2].is_zero());
}

TEST(FSeries, NeedsDeformedExpansion) {
  const RkExpansion rk = solve_rk(generic_context(2, false), 2);
  EXPECT_THROW(assemble_f(rk, 2), DomainError);
}

class ModelTest : public ::testing::TestWithParam<int> {};

TEST_P(ModelTest, QuarticAgreesWithGeneric) {
  const int k = GetParam();
  const WFunction w = model_W({ModelFamily::quartic, 2});
  EXPECT_TRUE(equal_on_hodograph(specialize_model({ModelFamily::quartic, 2}, k), closed_form_F(k, w), w));
}

TEST_P(ModelTest, TwoValenceAgreesWithGeneric) {
  const int k = GetParam();
  for (int nu : {3, 4}) {
    const ModelSpec spec{ModelFamily::two_valence, nu};
    const WFunction w = model_W(spec);
    EXPECT_TRUE(equal_on_hodograph(specialize_model(spec, k), closed_form_F(k, w), w)) << "nu = " << nu;
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, ModelTest, ::testing::Values(0, 1, 2));

TEST(ClosedForm, LiteralQuarticF2IsTheNegative) {
  const ModelSpec spec{ModelFamily::quartic, 2};
  const WFunction w = model_W(spec);
  const ClosedFormF fixed = specialize_model(spec, 2);
  const RingPtr ring = model_ring(w);
  const ClosedFormF literal{2,
                            RatFunc(parse_poly(ring, "(2*g2*r0 - 1)^3*(41 + 21*g2*r0 - 6*(g2*r0)^2)"),
                                    parse_poly(ring, "11520*(1 - g2*r0)^5")),
                            {}};
  const ClosedFormF negated{2, -fixed.rational, {}};
  EXPECT_FALSE(equal_on_hodograph(literal, fixed, w));
  EXPECT_TRUE(equal_on_hodograph(literal, negated, w));
}

TEST(ClosedForm, SixticNumericSpotCheck) {
  // W = 2 r + 12 r^2 + 60 r^3 for g = (1, 1, 1); both sides at its root.
  const unsigned digits = 60;
  const mpfr_prec_t bits = digits_to_bits(digits);
  const Potential pot = Potential::sixtic(Rational(1), Rational(1), Rational(1));
  const WFunction w = build_W(pot);
  const Real r0 = hodograph_root(w, Rational(1), digits).value();
  const Real one(1, bits);
  for (int k = 0; k <= 2; ++k) {
    const Real numeric = closed_form_F(k, w).evaluate({r0});
    const Real family = specialize_model({ModelFamily::sixtic, 2}, k).evaluate({r0, one, one, one});
    EXPECT_LT(abs(numeric - family).log10_abs(), -50) << "k = " << k;
  }
}

TEST(ClosedForm, QuarticValuesAtSimpleRoot) {
  // g2 = 1, g4 = 2/3: r0 = 1/4, so g2 r0 = 1/4 and F^(1) = ln(3/2)/12.
  const WFunction w = build_W(Potential::quartic(Rational(1), ratio(2, 3)));
  const mpfr_prec_t bits = digits_to_bits(50);
  const Real r0(ratio(1, 4), bits);
  const Real f1 = closed_form_F(1, w).evaluate({r0});
  const Real expected = log(Real(ratio(3, 2), bits)) / Real(12, bits);
  EXPECT_LT(abs(f1 - expected).log10_abs(), -45);
  // F^(2) = (1/2)^3 (41 + 21/4 - 6/16) / (11520 (3/4)^5)
  const Real f2 = closed_form_F(2, w).evaluate({r0});
  const Rational exact = ratio(1, 8) * (41 + ratio(21, 4) - ratio(6, 16)) / (11520 * pow(ratio(3, 4), 5));
  EXPECT_LT(abs(f2 - Real(exact, bits)).log10_abs(), -45);
}

TEST(ClosedForm, Errors) {
  const WFunction w = build_W(Potential::quartic(Rational(1), Rational(1)));
  EXPECT_THROW(closed_form_F(4, w), DomainError);
  EXPECT_THROW(specialize_model({ModelFamily::quartic, 2}, 3), DomainError);
  EXPECT_THROW(model_W({ModelFamily::two_valence, 1}), DomainError);
  const mpfr_prec_t bits = 100;
  // ln(24 r0^2 + 2 r0) at r0 = -1/24
  EXPECT_THROW(closed_form_F(1, w).evaluate({Real(ratio(-1, 24), bits)}), DomainError);
}

TEST(ClosedForm, PrintsWithoutZeroRationalPart) {
  const std::string s = closed_form_F(1, model_W({ModelFamily::quartic, 2})).to_string();
  EXPECT_EQ(s.rfind("1/12*ln(", 0), 0u) << s;
}

}  // namespace
}  // namespace genuskit
