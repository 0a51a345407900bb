#include "genuskit/critical/puiseux.hpp"

#include <algorithm>
#include <gmp.h>
#include <sstream>

#include "genuskit/algebra/jet.hpp"
#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {

namespace {

// Truncated Laurent series in sigma: c[i] is the coefficient of
// sigma^(val + i); terms from val + c.size() on are unknown.
struct Series {
  int val = 0;
  std::vector<Rational> c;

  static Series constant(const Rational& q, int len) {
    Series s;
    s.c.assign(static_cast<std::size_t>(len), Rational(0));
    s.c[0] = q;
    s.normalize();
    return s;
  }
  int end() const { return val + static_cast<int>(c.size()); }
  int len() const { return static_cast<int>(c.size()); }
  Rational at(int e) const {
    if (e < val || e >= end()) return Rational(0);
    return c[static_cast<std::size_t>(e - val)];
  }
  void normalize() {
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) {
      // Zero to the known order; keep the end.
      val = end();
      c.clear();
      return;
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    val += static_cast<int>(lead);
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series s;
    s.val = std::min(a.val, b.val);
    const int e = std::min(a.end(), b.end());
    for (int k = s.val; k < e; ++k) s.c.push_back(a.at(k) + b.at(k));
    s.normalize();
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + b * Series::constant(Rational(-1), b.len()); }
  friend Series operator*(const Series& a, const Series& b) {
    Series s;
    s.val = a.val + b.val;
    const int n = std::min(a.len(), b.len());
    s.c.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) s.c[static_cast<std::size_t>(i + j)] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
    }
    s.normalize();
    return s;
  }
  Series inverse() const {
    if (c.empty()) throw NumericError("series inverse: leading term lost to cancellation");
    Series s;
    s.val = -val;
    const int n = len();
    s.c.assign(static_cast<std::size_t>(n), Rational(0));
    s.c[0] = 1 / c[0];
    for (int k = 1; k < n; ++k) {
      Rational acc = 0;
      for (int j = 1; j <= k; ++j) acc += c[static_cast<std::size_t>(j)] * s.c[static_cast<std::size_t>(k - j)];
      s.c[static_cast<std::size_t>(k)] = -acc / c[0];
    }
    return s;
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
};

PuiseuxTerm to_tau(const Rational& coeff, int p, const Rational& kappa, int m) {
  // coeff sigma^p = coeff kappa^(p/m) (t - 1)^(p/m).
  PuiseuxTerm t;
  t.root = m;
  t.exponent = p;
  const int kappa_sign = kappa < 0 ? -1 : 1;
  t.sign = (coeff < 0 ? -1 : 1) * ((p % 2 != 0) ? kappa_sign : 1);
  const Rational abs_c = coeff < 0 ? Rational(-coeff) : coeff;
  const Rational abs_k = kappa < 0 ? Rational(-kappa) : kappa;
  t.radicand = pow(abs_c, m) * pow(abs_k, p);
  return t;
}

PuiseuxTerm leading(const Series& s, const Rational& kappa, int m, const char* what) {
  if (s.c.empty()) throw NumericError(std::string("Puiseux expansion of ") + what + " lost its leading term");
  return to_tau(s.c[0], s.val, kappa, m);
}

}  // namespace

std::optional<Rational> PuiseuxTerm::exact_coefficient() const {
  Integer rn, rd;
  Integer num = radicand.get_num();
  Integer den = radicand.get_den();
  const auto k = static_cast<unsigned long>(root);
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0 || mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) {
    return std::nullopt;
  }
  Rational r(rn, rd);
  r.canonicalize();
  return sign < 0 ? Rational(-r) : r;
}

Real PuiseuxTerm::coefficient(mpfr_prec_t bits) const {
  const Real r = genuskit::root(Real(radicand, bits), static_cast<unsigned long>(root));
  return sign < 0 ? -r : r;
}

std::string PuiseuxTerm::to_string(const std::string& var) const {
  std::ostringstream os;
  if (const auto q = exact_coefficient()) {
    os << genuskit::to_string(*q);
  } else {
    os << (sign < 0 ? "-" : "") << "(" << genuskit::to_string(radicand) << ")^(1/" << root << ")";
  }
  const Rational e = ratio(exponent, root);
  if (e == 1) {
    os << " " << var;
  } else if (e != 0) {
    os << " " << var << "^(" << genuskit::to_string(e) << ")";
  }
  return os.str();
}

PuiseuxReport puiseux_at_critical(const WFunction& w, const CriticalData& crit, int order) {
  if (order < 1) throw DomainError("Puiseux order must be positive");
  const int m = crit.m;
  const Rational& rc = crit.exact_rc();
  const UPoly W = w.as_upoly();
  // a_j = W^(j)(rc) / j!
  std::vector<Rational> a;
  {
    UPoly d = W;
    for (int j = 0; j <= W.degree(); ++j) {
      a.push_back(d(rc) / Rational(factorial(static_cast<unsigned>(j))));
      d = d.derivative();
    }
  }
  const Rational& am = a.at(static_cast<std::size_t>(m));
  PuiseuxReport rep;
  rep.m = m;
  rep.rc = rc;
  rep.kappa = -2 * rc / am;
  if (m % 2 == 0 && rep.kappa < 0) throw DomainError("no real expansion as t -> 1+ (even m, kappa < 0)");

  // Working precision: the rational functions below lose at most a few
  // leading orders to pole cancellation.
  const int len = order + 4 * m + 8;
  const Series sigma = [&] {
    Series s;
    s.val = 1;
    s.c.assign(static_cast<std::size_t>(len), Rational(0));
    s.c[0] = 1;
    return s;
  }();
  auto cst = [&](const Rational& q) { return Series::constant(q, len); };

  // W(rc + sigma v) - 1 + 2 (t - 1)(rc + sigma v) = 0 with t - 1 = sigma^m / kappa;
  // divided by sigma^m: sum_j a_j sigma^(j-m) v^j + (2/kappa)(rc + sigma v) = 0.
  std::vector<Rational> v(static_cast<std::size_t>(len), Rational(0));
  v[0] = 1;
  auto residual = [&]() {
    Series vs;
    vs.c = v;
    Series total = cst(2 / rep.kappa) * (cst(rc) + sigma * vs);
    Series vp = cst(1);
    Series sp = cst(1);
    for (int j = 1; j < static_cast<int>(a.size()); ++j) {
      vp = vp * vs;
      if (j >= m) {
        total = total + cst(a[static_cast<std::size_t>(j)]) * sp * vp;
        sp = sp * sigma;
      }
    }
    return total;
  };
  for (int i = 1; i < len; ++i) {
    v[static_cast<std::size_t>(i)] = -residual().at(i) / (m * am);
  }
  if (const Series r = residual(); !r.c.empty() && r.val < len) {
    throw InternalInconsistency("Puiseux solve left a residual");
  }
  Series vs;
  vs.c = v;
  const Series delta_r = sigma * vs;
  const Series r0 = cst(rc) + delta_r;
  const Series t = cst(1) + [&] {
    Series s = cst(1 / rep.kappa);
    for (int i = 0; i < m; ++i) s = s * sigma;
    return s;
  }();

  for (int i = 0; i < order; ++i) {
    rep.r0_sigma.push_back(v[static_cast<std::size_t>(i)]);
    if (v[static_cast<std::size_t>(i)] != 0) rep.r0_tau.push_back(to_tau(v[static_cast<std::size_t>(i)], i + 1, rep.kappa, m));
  }
  rep.r0_leading = to_tau(v[0], 1, rep.kappa, m);

  const RkExpansion rk = solve_deformed_rk(w, 1, JetMode::concrete);
  const JetContextPtr& ctx = rk.context;
  std::vector<Series> values(ctx->ring()->size(), cst(0));
  values[ctx->xi_index()] = r0;
  values[ctx->t_index()] = t;
  const std::function<Series(const Rational&)> lift = cst;
  auto eval = [&](const RatFunc& f) { return f.num().evaluate(values, lift) / f.den().evaluate(values, lift); };

  rep.r0pp_leading = leading(eval(rk.r[0].derive_T(2).to_ratfunc()), rep.kappa, m, "r0''");
  rep.r1_leading = leading(eval(rk.r[1].to_ratfunc()), rep.kappa, m, "r1");
  const Series f0 = cst(2) * r0 * r0 - cst(Rational(1, 2)) / (t * t);
  rep.f0_constant = f0.at(0);
  rep.f0_linear = to_tau(f0.at(1), 1, rep.kappa, m);
  return rep;
}

MatchingReport match_inner_outer(const PuiseuxReport& outer, const FormalTailSeries& tail) {
  if (tail.m != outer.m) throw DomainError("tail and expansion have different orders m");
  const int m = outer.m;
  MatchingReport rep;
  rep.outer = outer.f0_linear;
  // 4 a0 z with z = (direction (-2 rc y))^(1/m).
  const Rational base = -2 * outer.rc * tail.direction;
  if (m % 2 == 0 && base < 0) throw DomainError("inner tail has no real branch at x = -2 rc y");
  const Rational a0 = tail.a.at(0);
  rep.inner.root = m;
  rep.inner.exponent = 1;
  rep.inner.sign = (a0 < 0 ? -1 : 1) * (base < 0 ? -1 : 1);
  rep.inner.radicand = pow(4 * (a0 < 0 ? Rational(-a0) : a0), m) * (base < 0 ? Rational(-base) : base);
  rep.matches = rep.inner == rep.outer;
  return rep;
}

}  // namespace genuskit
