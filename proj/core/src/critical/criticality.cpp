#include "genuskit/critical/criticality.hpp"

#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

const Rational& CriticalData::exact_rc() const {
  if (!rc_exact) throw DomainError("critical point is not rational");
  return *rc_exact;
}

const Rational& CriticalData::exact_wm() const {
  if (!wm_exact) throw DomainError("W_m(rc) is not rational");
  return *wm_exact;
}

namespace {

Rational normalization(int m) { return Rational(double_factorial_odd(static_cast<unsigned>(m))) * pow(Rational(2), m); }

}  // namespace

std::optional<CriticalData> detect_criticality(const WFunction& w, unsigned digits) {
  const UPoly p = w.as_upoly() - UPoly(std::vector<Rational>{Rational(1)});
  if (p.degree() < 2) return std::nullopt;
  const UPoly g = gcd(p, p.derivative());
  if (g.degree() < 1) return std::nullopt;
  const UPoly g_sqf = square_free_part(g);
  const auto roots = isolate_roots(g_sqf, Rational(0), root_bound(g_sqf));
  if (roots.empty()) return std::nullopt;
  const RootInterval& iv = roots.front();
  const mpfr_prec_t bits = digits_to_bits(digits);
  CriticalData c;
  c.rc_exact = iv.exact;
  c.rc = iv.exact ? Real(*iv.exact, bits) : root_value(g_sqf, iv, bits);
  if (iv.exact) {
    c.m = root_multiplicity(p, *iv.exact);
  } else {
    // Each gcd with the derivative lowers the multiplicity by one.
    c.m = 1;
    for (UPoly q = g; q.degree() >= 1 && count_roots(sturm_sequence(square_free_part(q)), iv.lo, iv.hi) > 0;
         q = gcd(q, q.derivative())) {
      ++c.m;
    }
  }
  UPoly d = p;
  for (int j = 0; j < c.m; ++j) d = d.derivative();
  const Rational norm = normalization(c.m);
  if (iv.exact) {
    c.wm_exact = d(*iv.exact) / norm;
    c.wm = Real(*c.wm_exact, bits);
  } else {
    c.wm = d(c.rc) / Real(norm, bits);
  }
  return c;
}

CriticalData critical_data_at(const WFunction& w, const Rational& rc) {
  UPoly d = w.as_upoly();
  if (d(rc) != 1) throw DomainError("W(rc) != 1");
  int m = 0;
  do {
    d = d.derivative();
    ++m;
    if (d.is_zero()) throw DomainError("W is constant near rc");
  } while (d(rc) == 0);
  if (m < 2) throw DomainError("W'(rc) != 0: not a critical point");
  CriticalData c;
  c.rc_exact = rc;
  c.rc = Real(rc, 128);
  c.m = m;
  c.wm_exact = d(rc) / normalization(m);
  c.wm = Real(*c.wm_exact, 128);
  return c;
}

}  // namespace genuskit
