#include "genuskit/algebra/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "genuskit/errors.hpp"

namespace genuskit {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) {
    throw DomainError("ring has " + std::to_string(names_.size()) + " symbols; at most " +
                      std::to_string(kMaxVariables) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw DomainError("duplicate ring symbol '" + names_[i] + "'");
    }
  }
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("symbol '" + std::string(name) + "' is not in the ring");
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

// ---------------------------------------------------------------- Monomial

void Monomial::set(std::size_t i, int e) {
  if (e > INT16_MAX || e < INT16_MIN) throw DomainError("exponent out of range");
  degree_ += e - exp_[i];
  exp_[i] = static_cast<std::int16_t>(e);
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::int16_t e) { return e == 0; });
}

bool Monomial::has_negative() const {
  return std::any_of(exp_.begin(), exp_.end(), [](std::int16_t e) { return e < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = static_cast<std::int16_t>(exp_[i] + o.exp_[i]);
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = static_cast<std::int16_t>(exp_[i] - o.exp_[i]);
  }
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp_[i] > o.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  int deg = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = deg;
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int16_t e : exp_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// -------------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

Poly Poly::variable(RingPtr ring, std::size_t index, int power) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  Monomial m;
  m.set(index, power);
  return monomial(std::move(ring), m, Rational(1));
}

Poly Poly::variable(RingPtr ring, std::string_view name, int power) {
  const std::size_t i = ring->index(name);
  return variable(std::move(ring), i, power);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

void Poly::check_ring(const Poly& o) const {
  if (!same_ring(ring_, o.ring_) && ring_ && o.ring_) {
    throw DomainError("polynomial arithmetic across different rings");
  }
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Poly::constant_term() const {
  for (const auto& [m, c] : terms_) {
    if (m.is_one()) return c;
  }
  return Rational(0);
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

bool Poly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_negative(); });
}

int Poly::degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

int Poly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first[var];
  for (const auto& t : terms_) d = std::min(d, t.first[var]);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

bool Poly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.first[var] != 0; });
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  Poly r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_terms(terms_, o.terms_, false);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  Poly r(ring_ ? ring_ : o.ring_);
  r.terms_ = merge_terms(terms_, o.terms_, true);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  Poly r(ring_ ? ring_ : o.ring_);
  if (terms_.empty() || o.terms_.empty()) return r;
  if (terms_.size() == 1) return o.mul_monomial(terms_[0].first, terms_[0].second);
  if (o.terms_.size() == 1) return mul_monomial(o.terms_[0].first, o.terms_[0].second);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  Rational prod;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ma * mb, prod);
      if (!inserted) mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), prod.get_mpq_t());
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::operator/(const Rational& c) const {
  if (c == 0) throw DomainError("division of a polynomial by zero");
  return *this * Rational(1 / c);
}

Poly operator*(const Rational& c, const Poly& p) { return p * c; }

Poly& Poly::operator+=(const Poly& o) { return *this = *this + o; }
Poly& Poly::operator-=(const Poly& o) { return *this = *this - o; }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the grlex order.
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(ring_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
  }
  return true;
}

Poly Poly::partial(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const int e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    out.emplace_back(d, c * e);
  }
  return Poly(ring_, std::move(out));
}

std::map<int, Poly> Poly::coefficients_in(std::size_t var) const {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set(var, 0);
    buckets[m[var]].emplace_back(rest, c);
  }
  std::map<int, Poly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, Poly(ring_, std::move(ts)));
  return out;
}

Poly Poly::coefficient(std::size_t var, int exponent) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m[var] != exponent) continue;
    Monomial rest = m;
    rest.set(var, 0);
    out.emplace_back(rest, c);
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::compose(const RingPtr& target, const std::vector<Poly>& images) const {
  const std::size_t n = ring_ ? ring_->size() : 0;
  if (images.size() != n) throw DomainError("compose: one image per variable is required");
  // Cache powers per variable; most substitutions reuse small exponents.
  std::vector<std::map<int, Poly>> cache(n);
  auto power = [&](std::size_t i, int e) -> const Poly& {
    auto it = cache[i].find(e);
    if (it != cache[i].end()) return it->second;
    Poly value(target);
    if (e > 0) {
      auto prev = cache[i].find(e - 1);
      value = (prev != cache[i].end()) ? prev->second * images[i] : images[i].pow(static_cast<unsigned>(e));
    } else {
      if (!images[i].is_monomial()) {
        throw DomainError("compose: negative power of a non-monomial image for '" + ring_->name(i) + "'");
      }
      const auto& [m, c] = images[i].terms()[0];
      Monomial inv;
      for (std::size_t k = 0; k < target->size(); ++k) inv.set(k, -m[k] * (-e));
      value = Poly::monomial(target, inv, genuskit::pow(c, e));
    }
    return cache[i].emplace(e, std::move(value)).first->second;
  };
  Poly result(target);
  for (const auto& [m, c] : terms_) {
    Poly term(target, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (m[i] != 0) term *= power(i, m[i]);
    }
    result += term;
  }
  return result;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  std::vector<Poly> images;
  images.reserve(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    images.push_back(i == var ? value : Poly::variable(ring_, i));
  }
  return compose(ring_, images);
}

Poly Poly::embed(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Poly r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  const std::size_t n = ring_ ? ring_->size() : 0;
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) used[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) continue;
    auto j = target->find(ring_->name(i));
    if (!j) throw DomainError("embed: symbol '" + ring_->name(i) + "' missing from target ring");
    map[i] = *j;
  }
  for (const auto& [m, c] : terms_) {
    Monomial t;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] != 0) t.set(map[i], m[i]);
    }
    out.emplace_back(t, c);
  }
  return Poly(target, std::move(out));
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  check_ring(divisor);
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  Poly quotient(ring_);
  if (is_zero()) return quotient;
  const auto& [lm, lc] = divisor.leading_term();
  Poly rem = *this;
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lm.divides(rm)) return std::nullopt;
    Monomial qm = rm / lm;
    Rational qc = rc / lc;
    rem -= divisor.mul_monomial(qm, qc);
    qterms.emplace_back(qm, qc);
  }
  return Poly(ring_, std::move(qterms));
}

std::pair<Rational, Poly> Poly::primitive_integer_form() const {
  if (terms_.empty()) return {Rational(1), *this};
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (terms_.front().second < 0) factor = -factor;
  return {factor, *this / factor};
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.is_one()) {
      os << genuskit::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->size(); ++i) {
      const int e = m[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_->name(i);
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace genuskit
