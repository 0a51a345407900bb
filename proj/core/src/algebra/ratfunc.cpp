#include "genuskit/algebra/ratfunc.hpp"

#include "genuskit/algebra/gcd.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

RatFunc::RatFunc(Poly num) : num_(num), den_(Poly(num.ring(), Rational(1))) { reduce(); }

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  reduce();
}

RatFunc::RatFunc(RingPtr ring, const Rational& c) : num_(ring, c), den_(ring, Rational(1)) {}

void RatFunc::reduce() {
  const RingPtr& ring = num_.ring() ? num_.ring() : den_.ring();
  if (num_.is_zero()) {
    num_ = Poly(ring);
    den_ = Poly(ring, Rational(1));
    return;
  }
  // Clear negative exponents on both sides with one monomial factor.
  if (num_.has_negative_exponents() || den_.has_negative_exponents()) {
    Monomial lift;
    const Monomial cn = monomial_content(num_);
    const Monomial cd = monomial_content(den_);
    for (std::size_t i = 0; i < ring->size(); ++i) {
      const int need = std::max(0, std::max(-cn[i], -cd[i]));
      lift.set(i, need);
    }
    num_ = num_.mul_monomial(lift, Rational(1));
    den_ = den_.mul_monomial(lift, Rational(1));
  }
  if (!den_.is_constant()) {
    const Poly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const auto [factor, prim] = den_.primitive_integer_form();
  den_ = prim;
  num_ = num_ / factor;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (den_.is_constant()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  if (o.den_.is_constant()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  const Poly g = gcd(den_, o.den_);
  const Poly b = *den_.divide_exact(g);
  const Poly d = *o.den_.divide_exact(g);
  return RatFunc(num_ * d + o.num_ * b, b * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc(Poly(ring() ? ring() : o.ring()));
  if (den_.is_constant() && o.den_.is_constant()) return RatFunc(num_ * o.num_, den_ * o.den_);
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  const Poly a = g1.is_constant() ? num_ : *num_.divide_exact(g1);
  const Poly d = g1.is_constant() ? o.den_ : *o.den_.divide_exact(g1);
  const Poly c = g2.is_constant() ? o.num_ : *o.num_.divide_exact(g2);
  const Poly b = g2.is_constant() ? den_ : *den_.divide_exact(g2);
  Poly num = a * c;
  Poly den = b * d;
  const auto [factor, prim] = den.primitive_integer_form();
  return RatFunc(num / factor, prim, Reduced{});
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return *this * RatFunc(o.den_, o.num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero rational function raised to a negative power");
    return RatFunc(den_, num_).pow(-e);
  }
  // Powers of coprime parts stay coprime.
  Poly n = num_.pow(static_cast<unsigned>(e));
  Poly d = den_.pow(static_cast<unsigned>(e));
  const auto [factor, prim] = d.primitive_integer_form();
  return RatFunc(n / factor, prim, Reduced{});
}

RatFunc RatFunc::partial(std::size_t var) const {
  return RatFunc(num_.partial(var) * den_ - num_ * den_.partial(var), den_ * den_);
}

RatFunc RatFunc::compose(const RingPtr& target, const std::vector<RatFunc>& images) const {
  auto apply = [&](const Poly& p) {
    RatFunc acc(Poly(target), Poly(target, Rational(1)));
    std::vector<std::map<int, RatFunc>> cache(images.size());
    for (const auto& [m, c] : p.terms()) {
      RatFunc term(target, c);
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (m[i] == 0) continue;
        auto it = cache[i].find(m[i]);
        if (it == cache[i].end()) it = cache[i].emplace(m[i], images[i].pow(m[i])).first;
        term = term * it->second;
      }
      acc = acc + term;
    }
    return acc;
  };
  return apply(num_) / apply(den_);
}

RatFunc RatFunc::embed(const RingPtr& target) const {
  return RatFunc(num_.embed(target), den_.embed(target), Reduced{});
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace genuskit
