#include <gtest/gtest.h>

#include "genuskit/algebra/coupling_series.hpp"
#include "genuskit/algebra/gcd.hpp"
#include "genuskit/algebra/parse.hpp"
#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/ratfunc.hpp"
#include "genuskit/algebra/rational.hpp"
#include "genuskit/algebra/real.hpp"
#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational q = ratio(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(ratio(8, 4)), "2");
  EXPECT_THROW(ratio(1, 0), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("2/3"), ratio(2, 3));
  EXPECT_EQ(parse_rational("4/6"), ratio(2, 3));
  EXPECT_EQ(parse_rational("0.25"), ratio(1, 4));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, Combinatorics) {
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(double_factorial_odd(3), 15);  // (2n - 1)!!
  EXPECT_EQ(pow(ratio(2, 3), -2), ratio(9, 4));
}

class PolyTest : public ::testing::Test {
 protected:
  RingPtr ring = Ring::make({"x", "y", "z"});
  Poly P(const char* s) const { return parse_poly(ring, s); }
};

TEST_F(PolyTest, ArithmeticAndNormalization) {
  EXPECT_EQ(P("(x + y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P("x - x"), Poly(ring));
  EXPECT_TRUE(P("x - x").is_zero());
  EXPECT_EQ(P("(x + 1)*(x - 1)"), P("x^2 - 1"));
  EXPECT_EQ(P("x*y/(2*x)"), P("1/2*y"));
  EXPECT_EQ(P("3*x^2*y").total_degree(), 3);
  EXPECT_EQ(P("3*x^2*y + y^5").degree(1), 5);
}

TEST_F(PolyTest, LaurentMonomials) {
  const Poly p = P("x^-2*y + x");
  EXPECT_TRUE(p.has_negative_exponents());
  EXPECT_EQ(p.min_degree(0), -2);
  EXPECT_EQ(p * P("x^2"), P("y + x^3"));
}

TEST_F(PolyTest, ParseRejectsPolynomialDivision) {
  EXPECT_THROW(P("1/(x + y)"), ParseError);
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("w"), ParseError);
}

TEST_F(PolyTest, CalculusAndSubstitution) {
  const Poly p = P("x^3*y + 2*x*z");
  EXPECT_EQ(p.partial(0), P("3*x^2*y + 2*z"));
  EXPECT_EQ(p.substitute(1, P("z + 1")), P("x^3*z + x^3 + 2*x*z"));
  const std::function<Rational(const Rational&)> id = [](const Rational& q) { return q; };
  EXPECT_EQ(p.evaluate<Rational>({Rational(2), Rational(3), ratio(1, 2)}, id), 26);
}

TEST_F(PolyTest, ExactDivision) {
  const Poly a = P("x^2 - y^2");
  const auto q = a.divide_exact(P("x - y"));
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, P("x + y"));
  EXPECT_FALSE(a.divide_exact(P("x + 2*y")).has_value());
}

TEST_F(PolyTest, Gcd) {
  const Poly g = gcd(P("(x + y)^2*(x - z)"), P("(x + y)*(x + z)*3"));
  EXPECT_EQ(g, P("x + y"));
  EXPECT_EQ(gcd(P("4*x*y"), P("6*x^2")), P("x"));
  EXPECT_TRUE(gcd(Poly(ring), Poly(ring)).is_zero());
}

TEST_F(PolyTest, RatFuncReduces) {
  const RatFunc f(P("x^2 - y^2"), P("2*x + 2*y"));
  EXPECT_EQ(f.num(), P("1/2*x - 1/2*y"));
  EXPECT_TRUE(f.is_polynomial());
  const RatFunc a(P("1"), P("x"));
  const RatFunc b(P("1"), P("y"));
  EXPECT_EQ(a + b, RatFunc(P("x + y"), P("x*y")));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a / b).to_string(), RatFunc(P("y"), P("x")).to_string());
  EXPECT_THROW(RatFunc(P("x"), Poly(ring)), DomainError);
}

TEST(UPoly, RootIsolation) {
  // (x - 1)(x - 2)(x^2 - 2)
  const UPoly p({Rational(-4), Rational(6), Rational(0), Rational(-3), Rational(1)});
  const UPoly q = UPoly({Rational(2), Rational(-3), Rational(1)}) * UPoly({Rational(-2), Rational(0), Rational(1)});
  EXPECT_EQ(p, q);
  const auto roots = isolate_roots(p, Rational(-10), Rational(10));
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_FALSE(roots[0].exact.has_value());
  ASSERT_TRUE(roots[1].exact.has_value());
  EXPECT_EQ(*roots[1].exact, 1);
  const Real s2 = root_value(p, roots[2], 200);
  EXPECT_LT(abs(s2 - sqrt(Real(2, 200))).log10_abs(), -55);
  EXPECT_EQ(root_multiplicity(p * p, Rational(2)), 2);
  EXPECT_EQ(count_roots(sturm_sequence(p), Rational(0), Rational(3)), 3);
}

TEST(LaurentS, Arithmetic) {
  const LaurentS a = LaurentS::monomial(-1, Rational(2)) + LaurentS(Rational(1));
  const LaurentS b = a * a;
  EXPECT_EQ(b.coefficient(-2), 4);
  EXPECT_EQ(b.coefficient(-1), 4);
  EXPECT_EQ(b.coefficient(0), 1);
  EXPECT_EQ(b.min_exponent(), -2);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(CouplingSeries, TruncationAtCaps) {
  const CouplingSeries::Shape shape{{2, 4}, {2, 1}, 2};
  const CouplingSeries t2 = CouplingSeries::coupling(shape, 0);
  const CouplingSeries t4 = CouplingSeries::coupling(shape, 1);
  const CouplingSeries one = CouplingSeries::constant(shape, LaurentS(Rational(1)));
  const CouplingSeries p = (one + t2 + t4) * (one + t2 + t4) * (one + t2 + t4);
  EXPECT_TRUE(p.truncated());
  EXPECT_EQ(p.at({1, 0}), LaurentS(Rational(3)));
  EXPECT_EQ(p.at({2, 0}), LaurentS(Rational(3)));
  EXPECT_EQ(p.at({1, 1}), LaurentS(Rational(6)));
  EXPECT_FALSE(p.in_range({0, 2}));
  EXPECT_FALSE(p.in_range({2, 1}));
}

TEST(CouplingSeries, InverseOfUnit) {
  const CouplingSeries::Shape shape{{2}, {5}, 5};
  const CouplingSeries a = CouplingSeries::constant(shape, LaurentS(Rational(1))) - CouplingSeries::coupling(shape, 0);
  const CouplingSeries inv = a.invert();
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(inv.at({n}), LaurentS(Rational(1))) << n;
  EXPECT_EQ(a * inv, CouplingSeries::constant(shape, LaurentS(Rational(1))));
}

TEST(Real, Precision) {
  const mpfr_prec_t bits = digits_to_bits(60);
  EXPECT_GE(bits, 199);
  const Real third(ratio(1, 3), bits);
  EXPECT_EQ(third.to_string(5), "3.3333e-01");
  EXPECT_LT(abs(third * Real(3, bits) - Real(1, bits)).log10_abs(), -58);
}

}  // namespace
}  // namespace genuskit
