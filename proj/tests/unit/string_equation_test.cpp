#include <gtest/gtest.h>

#include "genuskit/errors.hpp"
#include "genuskit/string/hodograph.hpp"
#include "genuskit/string/potential.hpp"
#include "genuskit/string/rk.hpp"
#include "genuskit/string/u_table.hpp"
#include "test_support.hpp"

namespace genuskit {
namespace {

using testing::parse_jets;

const UCoeffTable& table() {
  static const UCoeffTable t = derive_u_table(5);
  return t;
}

TEST(UTable, FirstColumnIsTwoRk) {
  const UCoeffTable& u = table();
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(u.entry(k, 1), Poly::variable(u.ring(), u.jet(k, 0)) * Rational(2)) << k;
  }
}

TEST(UTable, WeightAndDegree) {
  const UCoeffTable& u = table();
  for (int k = 1; k <= 5; ++k) {
    for (int j = 1; j <= 3 * k; ++j) {
      const Poly& e = u.entry(k, j);
      EXPECT_FALSE(e.is_zero()) << k << "," << j;
      for (const auto& [m, c] : e.terms()) {
        EXPECT_EQ(u.weight(m), 2 * k) << "U_{" << k << "," << j << "}";
        EXPECT_EQ(u.jet_degree(m), j) << "U_{" << k << "," << j << "}";
        EXPECT_EQ(m[u.eta()], 0);
      }
    }
    EXPECT_TRUE(u.entry(k, 3 * k + 1).is_zero());
    EXPECT_TRUE(u.entry(k, 0).is_zero());
  }
}

TEST(UTable, LowEntries) {
  const UCoeffTable& u = table();
  EXPECT_EQ(u.entry(1, 2), parse_jets(u.ring(), "2*r0*r0''"));
  EXPECT_EQ(u.entry(1, 3), parse_jets(u.ring(), "10*r0*r0'^2"));
  EXPECT_EQ(u.entry(2, 6), parse_jets(u.ring(), "2310*r0^2*r0'^4"));
}

TEST(UTable, Limits) {
  EXPECT_THROW(derive_u_table(6), DomainError);
  EXPECT_THROW(derive_triple_scaling_table(7), DomainError);
  EXPECT_THROW(table().jet(0, 40), TruncationError);
}

TEST(TripleScaling, Entries) {
  const UCoeffTable t = derive_triple_scaling_table(3);
  EXPECT_TRUE(t.triple_scaling());
  EXPECT_EQ(t.entry(2, 2), parse_jets(t.ring(), "6*u1^2 + 2*rc*u1''"));
  EXPECT_EQ(t.entry(3, 3), parse_jets(t.ring(), "20*u1^3 + 10*rc*u1'^2 + 20*rc*u1*u1'' + 2*rc^2*u1''''"));
}

TEST(Potential, Validation) {
  EXPECT_THROW(Potential::from_strings({{"4", "-1"}}).validate(), DomainError);
  EXPECT_THROW(Potential::from_strings({{"3", "1"}}), ParseError);
  EXPECT_THROW(Potential::from_strings({{"2", "1/0"}}), ParseError);
  const Potential p = Potential::from_strings({{"2", "1"}, {"4", "g"}});
  EXPECT_FALSE(p.is_numeric());
  EXPECT_EQ(p.half_degree(), 2);
  EXPECT_EQ(*p.numeric(1), 1);
}

TEST(Potential, WFunction) {
  // W = sum binom(2n, n) n g_2n xi^n.
  const WFunction w = build_W(Potential::sixtic(Rational(1), Rational(1), Rational(1)));
  const UPoly u = w.as_upoly();
  EXPECT_EQ(u, UPoly({Rational(0), Rational(2), Rational(12), Rational(60)}));
}

TEST(Hodograph, QuarticRoot) {
  // 2 r0 + 8 r0^2 = 1
  const HodographRoot h = hodograph_root(build_W(Potential::quartic(Rational(1), ratio(2, 3))), Rational(1), 40);
  ASSERT_TRUE(h.unique());
  ASSERT_TRUE(h.exact[0].has_value());
  EXPECT_EQ(*h.exact[0], ratio(1, 4));
  EXPECT_FALSE(h.critical);
}

TEST(Hodograph, NoPositiveRootThrows) {
  // W = 12 x^2 - 6 x never reaches -1 for x > 0.
  const WFunction w = build_W(Potential::quartic(Rational(-3), Rational(1)));
  EXPECT_THROW(hodograph_root(w, Rational(-1), 30).value(), DomainError);
}

TEST(Rk, GenericR0Derivative) {
  const RkExpansion rk = solve_rk(generic_context(1, false), 1);
  const JetContext& c = *rk.context;
  const RatFunc d = rk.r[0].derive_T().to_ratfunc();
  EXPECT_EQ(d, RatFunc(Poly(c.ring(), Rational(1)), c.w_derivative(1)));
}

TEST(Rk, SymbolicGaussianVanishes) {
  const RkExpansion rk = solve_rk(build_W(Potential::symbolic(1)), 4, JetMode::concrete);
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(rk.r[k].is_zero()) << k;
}

TEST(Rk, DeformedAtTOneMatchesUndeformed) {
  const WFunction w = build_W(Potential::symbolic(3));
  const RkExpansion plain = solve_rk(w, 3, JetMode::concrete);
  const RkExpansion deformed = solve_deformed_rk(w, 3);
  const JetContext& c = *deformed.context;
  // At t = 1 the deformed D = 2(t - 1) + W' is W', so the delta-polynomials agree.
  for (int k = 0; k <= 3; ++k) {
    const Poly at_one = deformed.r[k].poly().substitute(c.t_index(), Poly(c.ring(), Rational(1)));
    EXPECT_EQ(at_one.to_string(), plain.r[k].poly().to_string()) << k;
  }
}

TEST(Rk, QuarticR1) {
  // Quartic W = 2 g2 xi + 12 g4 xi^2: r1 = xi (2 W''^2 - W' W''') / (12 W'^4)
  // with W''' = 0.
  const WFunction w = build_W(Potential::symbolic(2));
  const RkExpansion rk = solve_rk(w, 1, JetMode::concrete);
  const RingPtr& ring = rk.context->ring();
  const RatFunc expected(parse_poly(ring, "xi*2*(24*g4)^2"),
                         parse_poly(ring, "12*(2*g2 + 24*g4*xi)^4"));
  EXPECT_EQ(rk.r[1].to_ratfunc(), expected);
}

TEST(Rk, OrderLimit) {
  EXPECT_THROW(solve_rk(generic_context(6, false), 6), DomainError);
}

}  // namespace
}  // namespace genuskit
