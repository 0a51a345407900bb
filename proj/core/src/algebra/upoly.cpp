#include "genuskit/algebra/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "genuskit/errors.hpp"

namespace genuskit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
      if (i != var && m[i] != 0) throw DomainError("from_poly: polynomial is not univariate");
    }
    const int e = m[var];
    if (e < 0) throw DomainError("from_poly: negative exponent");
    if (static_cast<int>(c.size()) <= e) c.resize(e + 1);
    c[e] += coeff;
  }
  return UPoly(std::move(c));
}

Rational UPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[i];
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rational& k) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= k;
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(degree() - dd + 1);
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / d.leading();
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  rem.resize(dd);
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real UPoly::operator()(const Real& x) const {
  Real acc(0L, x.bits());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(*it, x.bits());
  return acc;
}

Poly UPoly::to_poly(const RingPtr& ring, std::size_t var) const {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Monomial m;
    m.set(var, static_cast<int>(i));
    terms.emplace_back(m, c_[i]);
  }
  return Poly(ring, std::move(terms));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || i == 0) os << genuskit::to_string(mag) << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

int root_multiplicity(const UPoly& p, const Rational& x) {
  if (p.is_zero()) throw DomainError("multiplicity of a root of the zero polynomial");
  UPoly lin(std::vector<Rational>{-x, 1});
  UPoly q = p;
  int m = 0;
  while (true) {
    auto [quot, rem] = q.divmod(lin);
    if (!rem.is_zero()) return m;
    q = quot;
    ++m;
  }
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

int variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& s : seq) {
    const int sg = sgn(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

}  // namespace

int count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b) {
  if (sturm.empty()) return 0;
  return variations(sturm, a) - variations(sturm, b);
}

Rational root_bound(const UPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
  return m + 1;
}

namespace {

Integer integer_leading(const UPoly& p) {
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Rational lead = p.leading() * den_lcm / num_gcd;
  return abs(lead.get_num());
}

// Bisects an isolating interval using Sturm counts so that roots on the
// interval boundary are handled without special cases.
RootInterval bisect(const std::vector<UPoly>& seq, RootInterval iv) {
  Rational mid = (iv.lo + iv.hi) / 2;
  if (count_roots(seq, iv.lo, mid) == 1) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
  return iv;
}

void detect_exact(const UPoly& sf, const std::vector<UPoly>& seq, RootInterval& iv) {
  const Integer lead = integer_leading(sf);
  const Rational width_target(1, lead * 4);
  while (iv.hi - iv.lo >= width_target) iv = bisect(seq, iv);
  Rational scaled_lo = iv.lo * lead;
  Integer k = scaled_lo.get_num() / scaled_lo.get_den();  // truncation toward zero
  for (Integer j = k - 1; j <= k + 2; ++j) {
    Rational cand(j, lead);
    cand.canonicalize();
    if (cand > iv.lo && cand <= iv.hi && sf(cand) == 0) {
      iv.exact = cand;
      iv.lo = cand;
      iv.hi = cand;
      return;
    }
  }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() == 0 || !(lo < hi)) return out;
  const UPoly sf = square_free_part(p);
  const auto seq = sturm_sequence(sf);
  std::vector<RootInterval> stack{{lo, hi, std::nullopt}};
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int n = count_roots(seq, iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      detect_exact(sf, seq, iv);
      out.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi, std::nullopt});
    stack.push_back({iv.lo, mid, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.hi < b.hi; });
  return out;
}

RootInterval refine(const UPoly& p, RootInterval iv, mpfr_prec_t bits) {
  if (iv.exact) return iv;
  const UPoly sf = square_free_part(p);
  const auto seq = sturm_sequence(sf);
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<unsigned long>(bits));
  while (iv.hi - iv.lo >= width) iv = bisect(seq, iv);
  return iv;
}

Real root_value(const UPoly& p, const RootInterval& iv, mpfr_prec_t bits) {
  if (iv.exact) return Real(*iv.exact, bits);
  RootInterval r = refine(p, iv, bits + 4);
  return Real(Rational((r.lo + r.hi) / 2), bits);
}

}  // namespace genuskit
