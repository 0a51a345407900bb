#include "genuskit/energy/closed_form.hpp"

#include <optional>
#include <sstream>

#include "genuskit/algebra/parse.hpp"
#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

RingPtr closed_form_ring() {
  static const RingPtr ring = Ring::make({"r0", "W1", "W2", "W3", "W4", "W5", "W6", "W7"});
  return ring;
}

GenericClosedForm generic_closed_form_F3(const Rational& c) {
  const RingPtr ring = closed_form_ring();
  const std::string text =
      "1/1008 - 1/(1008*r0^4*W1^4) - W2/(504*r0^3*W1^5)"
      " - (15*W2^2 - 4*W3*W1)/(6048*r0^2*W1^6)"
      " - (15*W2^3 + W4*W1^2 - 10*W3*W1*W2)/(6048*r0*W1^7)"
      " - (1575*W2^4 - 24*W5*W1^3 + 200*W3^2*W1^2 + (" + genuskit::to_string(c) +
      ")*W4*W1^2*W2 - 1800*W3*W1*W2^2)/(725760*W1^8)"
      " - r0*(-21420*W2^5 - 133*W6*W1^4 + 1644*W5*W1^3*W2 + 2488*W3*W4*W1^3"
      " - 10170*W4*W1^2*W2^2 + 40110*W3*W1*W2^3 - 12783*W3^2*W1^2*W2)/(362880*W1^9)"
      " - r0^2*(34300*W2^6 - 35*W7*W1^5 + 607*W4^2*W1^4 - 2915*W3^3*W1^3 + 539*W6*W1^4*W2"
      " + 1006*W3*W5*W1^4 - 4284*W5*W1^3*W2^2 + 22260*W4*W1^2*W2^3 - 81060*W3*W1*W2^4"
      " + 43050*W3^2*W1^2*W2^2 - 13452*W3*W4*W1^3*W2)/(362880*W1^10)";
  return {3, parse_poly(ring, text), {}};
}

GenericClosedForm generic_closed_form(int k) {
  const RingPtr ring = closed_form_ring();
  switch (k) {
    case 1:
      return {1, Poly(ring), {{Rational(1, 12), parse_poly(ring, "r0*W1")}}};
    case 2:
      return {2,
              parse_poly(ring,
                         "-1/240 + 1/(240*r0^2*W1^2) + 7*r0*W2^3/(360*W1^5)"
                         " + W2*(9*W2 - 58*r0*W3)/(2880*W1^4)"
                         " + (6*W2 - 2*r0*W3 + 5*r0^2*W4)/(1440*r0*W1^3)"),
              {}};
    case 3:
      return generic_closed_form_F3(Rational(300));
    default:
      throw DomainError("generic closed forms exist for k = 1, 2, 3");
  }
}

RingPtr model_ring(const WFunction& w) {
  std::vector<std::string> names = w.poly.ring()->names();
  names.at(0) = "r0";
  return Ring::make(std::move(names));
}

Poly w_at_r0(const WFunction& w, int j) {
  Poly d = w.poly;
  for (int i = 0; i < j; ++i) d = d.partial(0);
  std::vector<Poly> images;
  const RingPtr ring = model_ring(w);
  for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Poly::variable(ring, i));
  return d.compose(ring, images);
}

ClosedFormF specialize(const GenericClosedForm& form, const WFunction& w) {
  const RingPtr ring = model_ring(w);
  std::vector<RatFunc> images{RatFunc(Poly::variable(ring, std::size_t{0}))};
  for (int j = 1; j <= 7; ++j) images.emplace_back(w_at_r0(w, j));
  ClosedFormF out{form.k, RatFunc(form.rational).compose(ring, images), {}};
  for (const auto& lt : form.logs) out.logs.emplace_back(lt.coeff, RatFunc(lt.arg).compose(ring, images));
  return out;
}

ClosedFormF closed_form_F(int k, const WFunction& w) {
  if (k >= 1 && k <= 3) {
    ClosedFormF f = specialize(generic_closed_form(k), w);
    if (w_at_r0(w, 1).is_zero()) throw DomainError("W' vanishes identically");
    return f;
  }
  if (k != 0) throw DomainError("closed forms exist for k = 0..3");
  const RingPtr ring = model_ring(w);
  const Poly W = w_at_r0(w, 0);
  // integral_0^{r0} (W - W^2/2) dxi/xi, term by term.
  const Poly integrand = W - W * W / Rational(2);
  std::vector<Poly::Term> terms;
  for (const auto& [m, c] : integrand.terms()) {
    Monomial mm = m;
    const int e = m[0];
    if (e < 1) throw InternalInconsistency("W has a constant term");
    terms.emplace_back(mm, c / e);  // xi^e / xi integrates to r0^e / e
  }
  Poly poly(ring, std::move(terms));
  poly -= Poly(ring, Rational(3, 4));
  ClosedFormF out{0, RatFunc(poly), {}};
  out.logs.emplace_back(Rational(-1, 2), RatFunc(Poly::variable(ring, std::size_t{0})));
  out.logs.emplace_back(Rational(-1, 2), RatFunc(ring, Rational(2)));
  return out;
}

Real ClosedFormF::evaluate(const std::vector<Real>& values) const {
  if (values.empty()) throw DomainError("no values supplied");
  const mpfr_prec_t bits = values.front().bits();
  const std::function<Real(const Rational&)> lift = [bits](const Rational& q) { return Real(q, bits); };
  const Real den = rational.den().evaluate(values, lift);
  if (den.is_zero()) throw DomainError("closed form: vanishing denominator");
  Real total = rational.num().evaluate(values, lift) / den;
  for (const auto& [c, arg] : logs) {
    const Real a = arg.evaluate(values, lift);
    if (a.sign() <= 0) throw DomainError("closed form: nonpositive logarithm argument");
    total += Real(c, bits) * log(a);
  }
  return total;
}

std::string ClosedFormF::to_string() const {
  std::ostringstream os;
  const bool bare = rational.is_zero() && !logs.empty();
  if (!bare) os << rational.to_string();
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const auto& [c, arg] = logs[i];
    if (bare && i == 0) {
      os << (c < 0 ? "-" : "");
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << genuskit::to_string(Rational(abs(c))) << "*ln(" << arg.to_string() << ")";
  }
  return os.str();
}

namespace {

// Zero test for polynomials under W(r0) = 1, without rational-function
// arithmetic: either substitute v = P/Q for the coupling v (clearing Q^deg),
// or reduce modulo W(r0) - 1 when W has no symbols.
struct Reducer {
  RingPtr ring;
  std::optional<std::size_t> var;
  Poly P, Q;
  UPoly modulus;

  bool is_zero(const Poly& p) const {
    if (!var) return UPoly::from_poly(p, 0).divmod(modulus).second.is_zero();
    const auto coeffs = p.coefficients_in(*var);
    if (coeffs.empty()) return true;
    const int d = coeffs.rbegin()->first;
    Poly total(ring);
    for (const auto& [e, c] : coeffs) total += c * P.pow(static_cast<unsigned>(e)) * Q.pow(static_cast<unsigned>(d - e));
    return total.is_zero();
  }
};

Reducer make_reducer(const WFunction& w) {
  const RingPtr ring = model_ring(w);
  const Poly W = w_at_r0(w, 0);
  Reducer red{ring, std::nullopt, Poly(ring), Poly(ring), {}};
  for (std::size_t v = ring->size(); v-- > 1;) {
    if (W.degree(v) != 1) continue;
    red.var = v;
    red.Q = W.coefficient(v, 1);
    red.P = Poly(ring, Rational(1)) - W.coefficient(v, 0);
    return red;
  }
  if (ring->size() != 1) throw DomainError("cannot impose W(r0) = 1: no coupling enters W linearly");
  red.modulus = UPoly::from_poly(W, 0) - UPoly(std::vector<Rational>{Rational(1)});
  return red;
}

}  // namespace

bool equal_on_hodograph(const ClosedFormF& a, const ClosedFormF& b, const WFunction& w) {
  const Reducer red = make_reducer(w);
  const RingPtr& ring = red.ring;
  if (!red.is_zero(a.rational.num() * b.rational.den() - b.rational.num() * a.rational.den())) return false;
  Integer L = 1;
  for (const auto* f : {&a, &b}) {
    for (const auto& [c, arg] : f->logs) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.get_den_mpz_t());
  }
  // prod arg^(L c) over a, divided by the same over b, must be 1.
  Poly up(ring, Rational(1));
  Poly down(ring, Rational(1));
  auto accumulate = [&](const ClosedFormF& f, int sign) {
    for (const auto& [c, arg] : f.logs) {
      const Rational scaled = c * L * sign;
      const long e = scaled.get_num().get_si();
      const auto n = static_cast<unsigned>(e > 0 ? e : -e);
      if (e > 0) {
        up *= arg.num().pow(n);
        down *= arg.den().pow(n);
      } else {
        up *= arg.den().pow(n);
        down *= arg.num().pow(n);
      }
    }
  };
  accumulate(a, 1);
  accumulate(b, -1);
  return red.is_zero(up - down);
}

}  // namespace genuskit
