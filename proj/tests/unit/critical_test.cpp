#include <gtest/gtest.h>

#include "genuskit/critical/criticality.hpp"
#include "genuskit/critical/diffpoly.hpp"
#include "genuskit/critical/painleve.hpp"
#include "genuskit/critical/phase.hpp"
#include "genuskit/critical/puiseux.hpp"
#include "genuskit/errors.hpp"
#include "test_support.hpp"

namespace genuskit {
namespace {

using testing::parse_jets;

WFunction bmp() { return build_W(Potential::sixtic(ratio(3, 2), ratio(-1, 4), ratio(1, 60))); }

TEST(QuarticPhase, Regions) {
  EXPECT_EQ(classify_quartic(Rational(1), Rational(1)).region, "G1(1)");
  EXPECT_EQ(classify_quartic(Rational(-1), Rational(1)).region, "G1(2)");
  const PhaseVerdict crit = classify_quartic(Rational(-2), Rational(1));
  EXPECT_EQ(crit.phase, Phase::critical_boundary);
  EXPECT_EQ(crit.region, "critical curve");
  const PhaseVerdict two = classify_quartic(Rational(-3), Rational(1));
  EXPECT_EQ(two.region, "G2");
  EXPECT_EQ(two.fate, DeformationFate::crosses_at);
  ASSERT_TRUE(two.t0_exact.has_value());
  EXPECT_EQ(*two.t0_exact, 2);
  EXPECT_EQ(*classify_quartic(Rational(-5), ratio(9, 4)).t0_exact, 3);
  EXPECT_THROW(classify_quartic(Rational(1), Rational(0)), DomainError);
}

TEST(QuarticPhase, DeformedPotential) {
  const Potential p = deformed_potential(Potential::quartic(Rational(-3), Rational(1)), Rational(1), Rational(2));
  EXPECT_EQ(*p.numeric(1), -1);
  EXPECT_EQ(*p.numeric(2), ratio(1, 4));
  // At t0 the deformed couplings satisfy g2 = -2 sqrt(g4).
  EXPECT_EQ(classify_quartic(*p.numeric(1), *p.numeric(2)).phase, Phase::critical_boundary);
}

TEST(SixticPhase, Regions) {
  EXPECT_EQ(sixtic_one_cut_check(Rational(1), Rational(1), Rational(1)).region, "convex");
  EXPECT_EQ(sixtic_one_cut_check(Rational(1), ratio(-1, 4), ratio(1, 30)).region, "inside cone");
  EXPECT_EQ(sixtic_one_cut_check(ratio(3, 4), ratio(-1, 4), ratio(1, 30)).region, "cone");
  const PhaseVerdict curve = sixtic_one_cut_check(ratio(3, 2), ratio(-1, 4), ratio(1, 60));
  EXPECT_EQ(curve.region, "curve");
  EXPECT_EQ(curve.phase, Phase::critical_boundary);
  const PhaseVerdict out = sixtic_one_cut_check(ratio(1, 10), Rational(-1), ratio(1, 10));
  EXPECT_EQ(out.phase, Phase::undetermined);
  EXPECT_THROW(sixtic_one_cut_check(Rational(0), Rational(1), Rational(1)), DomainError);
}

TEST(Endpoint, QuarticRegular) {
  // r0 = 1/4 at T = 1, alpha = 1, h = g2 + 2 g4 (lambda + 2 r0) stays positive.
  const EndpointReport e = endpoint_solve_one_cut(Potential::quartic(Rational(1), ratio(2, 3)), Rational(1));
  ASSERT_TRUE(e.r0_exact.has_value());
  EXPECT_EQ(*e.r0_exact, ratio(1, 4));
  EXPECT_LT(abs(e.alpha - Real(1, e.alpha.bits())).log10_abs(), -45);
  EXPECT_TRUE(e.h_positive);
  EXPECT_FALSE(e.singular);
  EXPECT_EQ(e.verdict, "regular");
}

TEST(Endpoint, BmpIsSingular) {
  const EndpointReport e = endpoint_solve_one_cut(Potential::sixtic(ratio(3, 2), ratio(-1, 4), ratio(1, 60)), Rational(1));
  EXPECT_TRUE(e.singular);
  EXPECT_EQ(e.verdict, "singular");
  EXPECT_EQ(*e.r0_exact, 1);
}

TEST(Endpoint, TwoCutIsRejected) {
  EXPECT_THROW(endpoint_solve_one_cut(Potential::quartic(Rational(-3), Rational(1)), Rational(1)), DomainError);
}

TEST(Criticality, RegularAndCanonical) {
  EXPECT_FALSE(detect_criticality(build_W(Potential::quartic(Rational(1), ratio(2, 3)))).has_value());
  for (int m : {2, 3, 4}) {
    const auto c = detect_criticality(canonical_critical_W(m, ratio(1, 2)));
    ASSERT_TRUE(c.has_value()) << m;
    EXPECT_EQ(c->m, m);
    EXPECT_EQ(c->exact_rc(), ratio(1, 2));
  }
  const auto b = detect_criticality(bmp());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->exact_rc(), 1);
  EXPECT_EQ(b->m, 3);
}

TEST(GelfandDikii, LowMembers) {
  const GelfandDikii gd = gelfand_dikii(3);
  const RingPtr& ring = gd.ring->ring();
  EXPECT_EQ(gd.U[0], Poly(ring, Rational(1)));
  EXPECT_EQ(gd.U[1], parse_jets(ring, "2*u"));
  EXPECT_EQ(gd.U[2], parse_jets(ring, "6*u^2 + 2*rc*u''"));
  // Each U[k+1]' equals (rc d^3 + 4 u d + 2 u') U[k].
  const DiffRing& d = *gd.ring;
  const Poly u = d.jet(0, 0);
  for (int k = 0; k < 3; ++k) {
    const Poly rhs = d.symbol("rc") * d.dx(d.dx(d.dx(gd.U[k]))) + Rational(4) * u * d.dx(gd.U[k]) +
                     Rational(2) * d.dx(u) * gd.U[k];
    EXPECT_EQ(d.dx(gd.U[k + 1]), rhs) << k;
  }
}

TEST(DiffRing, IntegrateRejectsNonDerivatives) {
  const DiffRing d({}, {"u"}, 4);
  EXPECT_EQ(d.integrate(parse_jets(d.ring(), "2*u*u'")), parse_jets(d.ring(), "u^2"));
  EXPECT_THROW(d.integrate(parse_jets(d.ring(), "u*u''")), DomainError);
  EXPECT_EQ(d.format(parse_jets(d.ring(), "5*u'^2 + u''''")), "u'''' + 5 (u')^2");
}

TEST(Painleve, MembersAndAliases) {
  const auto c2 = detect_criticality(canonical_critical_W(2, Rational(1)));
  const PainleveMember p1 = painleve_member(2, *c2).normalized();
  EXPECT_EQ(p1.alias(), "Painleve I");
  const auto c3 = detect_criticality(bmp());
  const PainleveMember p3 = painleve_member(3, *c3).normalized();
  EXPECT_EQ(p3.alias(), "second member of the Painleve I hierarchy");
  EXPECT_EQ(p3.to_string(false), "u'''' + 10 u u'' + 5 (u')^2 + 10 u^3 = 10 x");
  EXPECT_THROW(painleve_member(2, *c3), DomainError);
}

TEST(Painleve, FormalTailM3) {
  const auto c = detect_criticality(bmp());
  const PainleveMember p = painleve_member(3, *c).normalized();
  const FormalTailSeries tail = formal_tail_series(p, 4);
  ASSERT_EQ(tail.a.size(), 4u);
  EXPECT_EQ(tail.a[0], 1);
  EXPECT_EQ(tail.a[1], ratio(1, 18));
  EXPECT_EQ(tail.a[2], ratio(-7, 108));
  EXPECT_EQ(tail.a[3], ratio(4199, 17496));
  EXPECT_EQ(tail.step(), ratio(7, 3));
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(*formal_tail_series(p, n).residual_exponent(), 1 - ratio(7 * n, 3)) << n;
  }
}

TEST(Painleve, TripleScalingSystem) {
  const WFunction w = bmp();
  const auto c = detect_criticality(w);
  const TripleScalingSystem sys = triple_scaling_system(2, *c, w);
  EXPECT_EQ(sys.equations.size(), 3u);
  for (int k = 0; k <= 2; ++k) EXPECT_FALSE(sys.equations[k].is_zero()) << k;
  EXPECT_THROW(triple_scaling_system(4, *c, w), DomainError);
}

TEST(Puiseux, BmpLeadingTerms) {
  const WFunction w = bmp();
  const auto c = detect_criticality(w);
  const PuiseuxReport p = puiseux_at_critical(w, *c);
  EXPECT_EQ(p.r0_leading, (PuiseuxTerm{-1, Rational(2), 3, 1}));
  EXPECT_EQ(p.r0pp_leading, (PuiseuxTerm{1, ratio(1, 2916), 3, -5}));
  EXPECT_EQ(*p.r1_leading.exact_coefficient(), ratio(1, 72));
  EXPECT_EQ(p.f0_constant, Rational(3, 2));
  EXPECT_EQ(p.f0_linear, (PuiseuxTerm{-1, Rational(128), 3, 1}));
  EXPECT_TRUE(match_inner_outer(p, formal_tail_series(painleve_member(3, *c).normalized(), 2)).matches);
}

TEST(Puiseux, EvenOrder) {
  const WFunction w = canonical_critical_W(2, Rational(1));
  const PuiseuxReport p = puiseux_at_critical(w, *detect_criticality(w));
  EXPECT_EQ(p.m, 2);
  EXPECT_EQ(p.r0_leading.root, 2);
  // W = 1 + (1 - xi)^2 is critical at 1 with kappa < 0: no real branch for t > 1.
  const WFunction up{parse_poly(Ring::make({"xi"}), "2 - 2*xi + xi^2")};
  EXPECT_THROW(puiseux_at_critical(up, critical_data_at(up, Rational(1))), DomainError);
}

}  // namespace
}  // namespace genuskit
