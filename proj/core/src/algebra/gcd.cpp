#include "genuskit/algebra/gcd.hpp"

#include <algorithm>
#include <vector>

#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

Poly one_like(const Poly& p) { return Poly(p.ring(), Rational(1)); }

Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return one_like(p);
  return p.primitive_integer_form().second;
}

Poly divide_or_throw(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalInconsistency("gcd: inexact division of a divisor");
  return *q;
}

Poly strip_monomial(const Poly& p, const Monomial& m) {
  Monomial inv;
  for (std::size_t i = 0; i < p.ring()->size(); ++i) inv.set(i, -m[i]);
  return p.mul_monomial(inv, Rational(1));
}

Poly gcd_rec(const Poly& a, const Poly& b);

// Upper bound on deg_v gcd(a, b): the degree of the univariate gcd of the
// images at an integer point where neither leading coefficient in v vanishes.
// Returns -1 when no such point was found.
int degree_bound(const Poly& a, const Poly& b, std::size_t v) {
  const std::size_t n = a.ring()->size();
  const Poly la = a.coefficient(v, a.degree(v));
  const Poly lb = b.coefficient(v, b.degree(v));
  static constexpr long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int attempt = 0; attempt < 3; ++attempt) {
    Poly ia = a, ib = b, ja = la, jb = lb;
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      const long x = kPrimes[(w + 5 * static_cast<std::size_t>(attempt)) % std::size(kPrimes)] * (attempt + 1);
      const Poly c(a.ring(), Rational(x));
      ia = ia.substitute(w, c);
      ib = ib.substitute(w, c);
      ja = ja.substitute(w, c);
      jb = jb.substitute(w, c);
    }
    if (ja.is_zero() || jb.is_zero()) continue;
    return gcd(UPoly::from_poly(ia, v), UPoly::from_poly(ib, v)).degree();
  }
  return -1;
}

// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var) {
  Poly g(p.ring());
  for (const auto& [e, c] : p.coefficients_in(var)) {
    g = g.is_zero() ? normalized(c) : gcd_rec(g, c);
    if (g.is_constant()) return one_like(p);
  }
  return g;
}

Poly primitive_in(const Poly& p, std::size_t var) {
  Poly c = content_in(p, var);
  return c.is_constant() ? normalized(p) : normalized(divide_or_throw(p, c));
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return one_like(a);

  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  const Monomial mg = Monomial::gcd(ma, mb);
  if (!ma.is_one() || !mb.is_one()) {
    Poly inner = gcd_rec(strip_monomial(a, ma), strip_monomial(b, mb));
    return normalized(inner.mul_monomial(mg, Rational(1)));
  }

  const std::size_t n = a.ring()->size();
  // A variable present in only one argument cannot occur in the gcd.
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_a = a.depends_on(v);
    const bool in_b = b.depends_on(v);
    if (in_a && !in_b) return gcd_rec(content_in(a, v), b);
    if (in_b && !in_a) return gcd_rec(a, content_in(b, v));
  }

  // Variables the gcd cannot contain are removed through contents; a gcd
  // free of every variable is 1.
  bool any = false;
  for (std::size_t v = 0; v < n; ++v) {
    if (!a.depends_on(v)) continue;
    const int bound = degree_bound(a, b, v);
    if (bound == 0) {
      if (a.ring()->size() == 1) return one_like(a);
      const Poly ca = content_in(a, v);
      if (ca.is_constant()) return one_like(a);
      const Poly cb = content_in(b, v);
      if (cb.is_constant()) return one_like(a);
      return gcd_rec(ca, cb);
    }
    any = true;
  }
  if (!any) return one_like(a);

  std::size_t best = n;
  std::size_t best_count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t count = 0;
    for (const auto& t : a.terms()) count += t.first[v] != 0;
    for (const auto& t : b.terms()) count += t.first[v] != 0;
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  if (best == n) return one_like(a);

  const Poly ca = content_in(a, best);
  const Poly cb = content_in(b, best);
  const Poly content = gcd_rec(ca, cb);
  Poly p = ca.is_constant() ? normalized(a) : normalized(divide_or_throw(a, ca));
  Poly q = cb.is_constant() ? normalized(b) : normalized(divide_or_throw(b, cb));
  if (p.degree(best) < q.degree(best)) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q, best);
    if (r.is_zero()) break;
    if (r.degree(best) == 0) {
      q = one_like(q);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, best);
  }
  Poly g = q.is_constant() ? q : primitive_in(q, best);
  return normalized(g * content);
}

}  // namespace

Monomial monomial_content(const Poly& p) {
  if (p.is_zero()) return Monomial();
  Monomial m = p.terms().front().first;
  for (const auto& t : p.terms()) m = Monomial::gcd(m, t.first);
  return m;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
  const int db = b.degree(var);
  const Poly lb = b.coefficient(var, db);
  Poly r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    const Poly lr = r.coefficient(var, dr);
    Monomial shift;
    shift.set(var, dr - db);
    r = lb * r - (lr * b).mul_monomial(shift, Rational(1));
  }
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.has_negative_exponents() || b.has_negative_exponents()) {
    throw DomainError("gcd requires polynomials without negative exponents");
  }
  if (!same_ring(a.ring(), b.ring()) && !a.is_zero() && !b.is_zero()) {
    throw DomainError("gcd across different rings");
  }
  return gcd_rec(a, b);
}

}  // namespace genuskit
