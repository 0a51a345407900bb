#include <gtest/gtest.h>

#include <random>

#include "genuskit/algebra/coupling_series.hpp"
#include "genuskit/algebra/gcd.hpp"
#include "genuskit/algebra/parse.hpp"
#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/ratfunc.hpp"

namespace genuskit {
namespace {

constexpr int kTrials = 40;

class RandomPolys : public ::testing::Test {
 protected:
  RingPtr ring = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng{0x5eed};

  Rational coeff() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return ratio(num(rng), den(rng));
  }

  Poly poly(int terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::vector<Poly::Term> ts;
    for (int i = 0; i < terms; ++i) {
      Monomial m;
      for (std::size_t v = 0; v < ring->size(); ++v) m.set(v, e(rng));
      ts.emplace_back(m, coeff());
    }
    return Poly(ring, std::move(ts));
  }

  Poly nonzero(int terms = 3, int max_exp = 2) {
    Poly p = poly(terms, max_exp);
    while (p.is_zero()) p = poly(terms, max_exp);
    return p;
  }
};

TEST_F(RandomPolys, RingAxioms) {
  for (int i = 0; i < kTrials; ++i) {
    const Poly a = poly(), b = poly(), c = poly();
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_F(RandomPolys, LeibnizRule) {
  for (int i = 0; i < kTrials; ++i) {
    const Poly a = poly(), b = poly();
    for (std::size_t v = 0; v < ring->size(); ++v) {
      EXPECT_EQ((a * b).partial(v), a.partial(v) * b + a * b.partial(v));
    }
  }
}

TEST_F(RandomPolys, PrintParseRoundTrip) {
  for (int i = 0; i < kTrials; ++i) {
    const Poly a = poly(5, 4);
    EXPECT_EQ(parse_poly(ring, a.to_string()), a) << a.to_string();
  }
}

TEST_F(RandomPolys, GcdDividesAndIsMaximal) {
  for (int i = 0; i < kTrials / 2; ++i) {
    const Poly a = nonzero(), b = nonzero(), c = nonzero();
    const Poly g = gcd(a * c, b * c);
    EXPECT_TRUE((a * c).divide_exact(g).has_value());
    EXPECT_TRUE((b * c).divide_exact(g).has_value());
    EXPECT_TRUE(g.divide_exact(c).has_value()) << "c = " << c.to_string() << ", g = " << g.to_string();
  }
}

TEST_F(RandomPolys, RatFuncField) {
  for (int i = 0; i < kTrials / 2; ++i) {
    const RatFunc f(nonzero(), nonzero());
    const RatFunc g(nonzero(), nonzero());
    const RatFunc h(nonzero(), nonzero());
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ((f * g) / g, f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE(f.den().leading_term().second > 0);
  }
}

TEST(RandomSeries, InverseIsAnInvolution) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5, 5);
  const CouplingSeries::Shape shape{{2, 4}, {3, 3}, 4};
  for (int trial = 0; trial < kTrials / 2; ++trial) {
    CouplingSeries a(shape);
    for (const auto& e : a.exponent_vectors()) {
      const bool constant = e[0] == 0 && e[1] == 0;
      LaurentS c = constant ? LaurentS::monomial(static_cast<int>(num(rng) % 3), Rational(1 + std::abs(num(rng))))
                            : LaurentS::monomial(static_cast<int>(num(rng) % 2), Rational(num(rng))) +
                                  LaurentS(Rational(num(rng)));
      a.set(e, c);
    }
    const CouplingSeries inv = a.invert();
    EXPECT_EQ(inv.invert(), a);
    EXPECT_EQ(a * inv, CouplingSeries::constant(shape, LaurentS(Rational(1))));
  }
}

TEST(RandomSeries, CapsAreRespected) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> cap(0, 3);
  for (int trial = 0; trial < kTrials; ++trial) {
    const CouplingSeries::Shape shape{{2, 4, 6}, {cap(rng), cap(rng), cap(rng)}, cap(rng) + 1};
    const CouplingSeries one = CouplingSeries::constant(shape, LaurentS(Rational(1)));
    CouplingSeries sum = one;
    for (std::size_t i = 0; i < 3; ++i) sum += CouplingSeries::coupling(shape, i);
    const CouplingSeries p = sum * sum * sum;
    for (const auto& e : p.exponent_vectors()) {
      int total = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_LE(e[i], shape.caps[i]);
        total += e[i];
      }
      EXPECT_LE(total, shape.total_cap);
      // Multinomial coefficient of (1 + t2 + t4 + t6)^3.
      if (total <= 3) {
        Integer m = factorial(3) / (factorial(3 - total) * factorial(e[0]) * factorial(e[1]) * factorial(e[2]));
        EXPECT_EQ(p.at(e), LaurentS(Rational(m)));
      }
    }
  }
}

}  // namespace
}  // namespace genuskit
