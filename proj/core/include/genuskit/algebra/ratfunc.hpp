#pragma once

#include <string>
#include <vector>

#include "genuskit/algebra/poly.hpp"

namespace genuskit {

// Reduced quotient num/den over Q. The denominator is an integer primitive
// polynomial with positive leading coefficient and gcd(num, den) = 1; neither
// part carries negative exponents.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);
  RatFunc(RingPtr ring, const Rational& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc pow(int e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc partial(std::size_t var) const;
  // Substitutes a rational function for each variable of this ring.
  RatFunc compose(const RingPtr& target, const std::vector<RatFunc>& images) const;
  RatFunc embed(const RingPtr& target) const;

  template <class V>
  V evaluate(const std::vector<V>& values, const std::function<V(const Rational&)>& from_rational) const {
    return V(num_.evaluate(values, from_rational) / den_.evaluate(values, from_rational));
  }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Poly num_;
  Poly den_;
};

}  // namespace genuskit
