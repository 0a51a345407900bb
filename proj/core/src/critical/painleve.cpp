#include "genuskit/critical/painleve.hpp"

#include <gmp.h>

#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/string/u_table.hpp"

namespace genuskit {

GelfandDikii gelfand_dikii(int kmax, const std::optional<Rational>& rc) {
  if (kmax < 1 || kmax > 12) throw DomainError("gelfand_dikii supports 1 <= kmax <= 12");
  std::vector<std::string> constants;
  if (!rc) constants.push_back("rc");
  auto ring = std::make_shared<const DiffRing>(constants, std::vector<std::string>{"u"}, 2 * kmax + 1);
  const Poly c = rc ? Poly(ring->ring(), *rc) : ring->symbol("rc");
  const Poly u = ring->jet(0, 0);
  const Poly ux = ring->jet(0, 1);
  GelfandDikii out{ring, {Poly(ring->ring(), Rational(1))}};
  for (int k = 0; k < kmax; ++k) {
    const Poly& prev = out.U.back();
    const Poly d1 = ring->dx(prev);
    const Poly rhs = c * ring->dx(ring->dx(d1)) + Rational(4) * u * d1 + Rational(2) * ux * prev;
    try {
      out.U.push_back(ring->integrate(rhs));
    } catch (const DomainError&) {
      throw InternalInconsistency("Gel'fand-Dikii step " + std::to_string(k + 1) + " is not an exact derivative");
    }
  }
  return out;
}

namespace {

Rational normalization(int j) { return Rational(double_factorial_odd(static_cast<unsigned>(j))) * pow(Rational(2), j); }

Rational w_normalized_at(const WFunction& w, int j, const Rational& rc) {
  UPoly d = w.as_upoly();
  for (int i = 0; i < j; ++i) d = d.derivative();
  return d(rc) / normalization(j);
}

std::string ordinal(int n) {
  static const char* const words[] = {"", "first", "second", "third", "fourth", "fifth", "sixth"};
  if (n >= 1 && n <= 6) return words[n];
  return std::to_string(n) + "-th";
}

std::string affine(const Rational& a, const std::string& x, const Rational& b, const std::string& y) {
  std::string s;
  auto piece = [&](const Rational& c, const std::string& v) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += genuskit::to_string(mag) + " ";
    s += v;
  };
  piece(a, x);
  piece(b, y);
  return s.empty() ? "0" : s;
}

Rational coefficient_of(const Poly& p, const Poly& monomial) {
  const Monomial& target = monomial.leading_term().first;
  for (const auto& [mono, c] : p.terms()) {
    if (mono == target) return c;
  }
  return Rational(0);
}

// Rational m-th root of q, if any; for even m the positive one.
std::optional<Rational> rational_root(const Rational& q, int m) {
  if (q < 0 && m % 2 == 0) return std::nullopt;
  const bool neg = q < 0;
  Integer num = neg ? Integer(-q.get_num()) : Integer(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m)) == 0) return std::nullopt;
  Rational r(rn, rd);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace

PainleveMember painleve_member(int m, const CriticalData& crit) {
  if (m < 2) throw DomainError("m = 1 is algebraic, not a Painleve member");
  if (m != crit.m) throw DomainError("requested m differs from the criticality order of W");
  const Rational& rc = crit.exact_rc();
  const Rational& wm = crit.exact_wm();
  const GelfandDikii gd = gelfand_dikii(m, rc);
  auto ring = std::make_shared<const DiffRing>(std::vector<std::string>{}, std::vector<std::string>{"u"}, 2 * m);
  std::vector<Poly> images;
  for (int k = 0; k <= gd.ring->max_order(); ++k) {
    images.push_back(k <= 2 * m ? ring->jet(0, k) : Poly(ring->ring()));
  }
  PainleveMember p;
  p.m = m;
  p.rc = rc;
  p.wm = wm;
  p.ring = ring;
  p.lhs = gd.U.at(static_cast<std::size_t>(m)).compose(ring->ring(), images) * wm;
  p.x_coeff = 1;
  p.y_coeff = -2 * rc;
  return p;
}

PainleveMember PainleveMember::normalized() const {
  const Rational lead = coefficient_of(lhs, ring->jet(0, 2 * m - 2));
  if (lead == 0) throw InternalInconsistency("Painleve member lacks its top derivative");
  PainleveMember out = *this;
  const Rational s = 1 / lead;
  out.lhs = lhs * s;
  out.x_coeff = x_coeff * s;
  out.y_coeff = y_coeff * s;
  return out;
}

std::string PainleveMember::alias() const {
  if (m == 2) return "Painleve I";
  return ordinal(m - 1) + " member of the Painleve I hierarchy";
}

std::string PainleveMember::to_string(bool with_y) const {
  return ring->format(lhs) + " = " + affine(x_coeff, "x", with_y ? y_coeff : Rational(0), "y");
}

std::optional<Rational> FormalTailSeries::residual_exponent() const {
  if (residual.is_zero()) return std::nullopt;
  return ratio(residual.max_exponent(), m);
}

Real FormalTailSeries::evaluate(const Real& x) const {
  const Real s = direction > 0 ? x : -x;
  if (s.sign() < 0 && m % 2 == 0) throw DomainError("no real branch of the tail there");
  const Real z = root(s, static_cast<unsigned long>(m));
  if (z.is_zero()) throw DomainError("tail series evaluated at x = 0");
  const mpfr_prec_t bits = x.bits();
  Real total(0L, bits);
  for (std::size_t n = 0; n < a.size(); ++n) {
    const long e = 1 - (2L * m + 1) * static_cast<long>(n);
    total += Real(a[n], bits) * pow(z, e);
  }
  return total;
}

FormalTailSeries formal_tail_series(const PainleveMember& member, int terms) {
  if (terms < 1) throw DomainError("formal tail needs at least one term");
  const int m = member.m;
  const Rational c = coefficient_of(member.lhs, member.ring->jet(0, 0).pow(static_cast<unsigned>(m)));
  if (c == 0 || member.x_coeff == 0) throw DomainError("member has no u^m x balance");
  FormalTailSeries out;
  out.m = m;
  // Leading balance c a0^m = direction * x_coeff.
  std::optional<Rational> a0;
  for (int dir : {1, -1}) {
    a0 = rational_root(member.x_coeff * dir / c, m);
    if (a0) {
      out.direction = dir;
      break;
    }
  }
  if (!a0) throw DomainError("leading balance c a0^m = x-coefficient has no rational solution");
  const int dir = out.direction;

  auto derivative = [&](const LaurentS& f) {
    LaurentS d;
    for (const auto& [e, k] : f.terms()) d += LaurentS::monomial(e - m, k * ratio(e * dir, m));
    return d;
  };
  const auto& ring = member.ring;
  auto residual_of = [&](const LaurentS& u) {
    std::vector<LaurentS> jets{u};
    for (int k = 1; k <= ring->max_order(); ++k) jets.push_back(derivative(jets.back()));
    LaurentS total = LaurentS::monomial(m, -member.x_coeff * dir);
    const std::size_t first = ring->ring()->index("u");
    for (const auto& [mono, coeff] : member.lhs.terms()) {
      LaurentS term(coeff);
      for (int k = 0; k <= ring->max_order(); ++k) {
        for (int e = 0; e < mono[first + static_cast<std::size_t>(k)]; ++e) term = term * jets[static_cast<std::size_t>(k)];
      }
      total += term;
    }
    return total;
  };

  out.a.push_back(*a0);
  LaurentS u = LaurentS::monomial(1, *a0);
  const Rational linear = c * m * pow(*a0, m - 1);
  for (int n = 1; n < terms; ++n) {
    const LaurentS r = residual_of(u);
    const int e = m - (2 * m + 1) * n;
    if (!r.is_zero() && r.max_exponent() > e) throw InternalInconsistency("tail residual above the expected order");
    const Rational an = -r.coefficient(e) / linear;
    out.a.push_back(an);
    u += LaurentS::monomial(1 - (2 * m + 1) * n, an);
  }
  out.residual = residual_of(u);
  return out;
}

WFunction canonical_critical_W(int m, const Rational& rc) {
  if (m < 2) throw DomainError("critical order must be at least 2");
  if (rc <= 0) throw DomainError("critical point must be positive");
  const RingPtr ring = Ring::make({"xi"});
  const Poly one(ring, Rational(1));
  const Poly base = one - Poly::variable(ring, std::size_t{0}) / rc;
  return WFunction{one - base.pow(static_cast<unsigned>(m))};
}

TripleScalingSystem triple_scaling_system(int kmax, const CriticalData& crit, const WFunction& w) {
  const int m = crit.m;
  if (kmax < 0) throw DomainError("kmax must be nonnegative");
  if (m + kmax > 6) throw DomainError("triple scaling system supports m + kmax <= 6");
  const Rational& rc = crit.exact_rc();
  const UCoeffTable table = derive_triple_scaling_table(m + kmax);
  std::vector<std::string> functions;
  for (int i = 1; i <= kmax + 1; ++i) functions.push_back("r" + std::to_string(i));
  const int order = 2 * (m + kmax) + 1;
  auto ring = std::make_shared<const DiffRing>(std::vector<std::string>{"y"}, functions, order, "x");

  // Table symbols -> r_i jets, rc -> its value; jets of r_i with i > kmax + 1
  // never occur in the emitted equations.
  std::vector<Poly> images(table.ring()->size(), Poly(ring->ring()));
  images[table.rc()] = Poly(ring->ring(), rc);
  for (int i = 1; i <= m + kmax; ++i) {
    for (int k = 0; k <= table.max_jet_order(i); ++k) {
      if (i <= kmax + 1) images[table.jet(i, k)] = ring->jet(static_cast<std::size_t>(i - 1), k);
    }
  }
  auto lift = [&](const Poly& p) { return p.compose(ring->ring(), images); };

  std::vector<Rational> wj(static_cast<std::size_t>(m + kmax + 1));
  for (int j = m; j <= m + kmax; ++j) wj[static_cast<std::size_t>(j)] = w_normalized_at(w, j, rc);
  if (wj[static_cast<std::size_t>(m)] != crit.exact_wm()) throw DomainError("W does not match the critical data");

  TripleScalingSystem sys;
  sys.ring = ring;
  const Poly x = ring->symbol("x");
  const Poly y = ring->symbol("y");
  sys.equations.push_back(lift(table.entry(m, m)) * wj[static_cast<std::size_t>(m)] - x + y * (2 * rc));
  for (int k = 1; k <= kmax; ++k) {
    Poly eq = y * ring->jet(static_cast<std::size_t>(k - 1), 0) * Rational(2);
    for (int j = m; j <= m + k; ++j) eq += lift(table.entry(m + k, j)) * wj[static_cast<std::size_t>(j)];
    sys.equations.push_back(eq);
  }
  return sys;
}

}  // namespace genuskit
