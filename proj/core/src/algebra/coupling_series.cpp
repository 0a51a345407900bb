#include "genuskit/algebra/coupling_series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "genuskit/errors.hpp"

namespace genuskit {

LaurentS::LaurentS(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentS LaurentS::monomial(int exponent, const Rational& c) {
  LaurentS r;
  if (c != 0) r.terms_.emplace_back(exponent, c);
  return r;
}

Rational LaurentS::coefficient(int exponent) const {
  for (const auto& [e, c] : terms_) {
    if (e == exponent) return c;
  }
  return Rational(0);
}

int LaurentS::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of zero Laurent polynomial");
  return terms_.front().first;
}

int LaurentS::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of zero Laurent polynomial");
  return terms_.back().first;
}

LaurentS LaurentS::operator-() const {
  LaurentS r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentS LaurentS::operator+(const LaurentS& o) const {
  LaurentS r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      r.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return r;
}

LaurentS LaurentS::operator-(const LaurentS& o) const { return *this + (-o); }

LaurentS LaurentS::operator*(const LaurentS& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (terms_.size() == 1 && o.terms_.size() == 1) {
    return monomial(terms_[0].first + o.terms_[0].first, terms_[0].second * o.terms_[0].second);
  }
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
  }
  LaurentS r;
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  }
  return r;
}

LaurentS LaurentS::operator*(const Rational& c) const {
  if (c == 0) return {};
  LaurentS r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentS& LaurentS::operator+=(const LaurentS& o) {
  *this = *this + o;
  return *this;
}

LaurentS LaurentS::shifted(int by) const {
  LaurentS r = *this;
  for (auto& t : r.terms_) t.first += by;
  return r;
}

std::string LaurentS::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << genuskit::to_string(c);
    if (e != 0) os << "*s^" << e;
  }
  return os.str();
}

std::size_t CouplingSeries::Shape::size() const {
  std::size_t n = 1;
  for (int c : caps) n *= static_cast<std::size_t>(c + 1);
  return n;
}

CouplingSeries::CouplingSeries(Shape shape) : shape_(std::move(shape)) {
  if (shape_.caps.size() != shape_.valences.size()) throw DomainError("coupling series: caps/valences mismatch");
  for (int c : shape_.caps) {
    if (c < 0) throw DomainError("coupling series: negative cap");
  }
  coeffs_.resize(shape_.size());
  total_degree_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto e = exponents_of(i);
    int d = 0;
    for (int x : e) d += x;
    total_degree_[i] = d;
  }
}

CouplingSeries CouplingSeries::constant(const Shape& shape, const LaurentS& c) {
  CouplingSeries r(shape);
  r.coeffs_[0] = c;
  return r;
}

CouplingSeries CouplingSeries::coupling(const Shape& shape, std::size_t i) {
  CouplingSeries r(shape);
  std::vector<int> e(shape.valences.size(), 0);
  e.at(i) = 1;
  if (r.in_range(e)) {
    r.coeffs_[r.index(e)] = LaurentS(Rational(1));
  } else {
    r.truncated_ = true;
  }
  return r;
}

std::size_t CouplingSeries::index(const std::vector<int>& exponents) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    idx = idx * static_cast<std::size_t>(shape_.caps[i] + 1) + static_cast<std::size_t>(exponents[i]);
  }
  return idx;
}

std::vector<int> CouplingSeries::exponents_of(std::size_t index) const {
  std::vector<int> e(shape_.caps.size());
  for (std::size_t i = e.size(); i-- > 0;) {
    const auto base = static_cast<std::size_t>(shape_.caps[i] + 1);
    e[i] = static_cast<int>(index % base);
    index /= base;
  }
  return e;
}

bool CouplingSeries::in_range(const std::vector<int>& exponents) const {
  if (exponents.size() != shape_.caps.size()) return false;
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > shape_.caps[i]) return false;
    total += exponents[i];
  }
  return total <= shape_.total_cap;
}

const LaurentS& CouplingSeries::at(const std::vector<int>& exponents) const {
  if (!in_range(exponents)) throw TruncationError("coupling series: exponent vector beyond the caps");
  return coeffs_[index(exponents)];
}

void CouplingSeries::set(const std::vector<int>& exponents, LaurentS value) {
  if (!in_range(exponents)) throw TruncationError("coupling series: exponent vector beyond the caps");
  coeffs_[index(exponents)] = std::move(value);
}

std::vector<std::vector<int>> CouplingSeries::exponent_vectors() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (total_degree_[i] <= shape_.total_cap) out.push_back(exponents_of(i));
  }
  return out;
}

void CouplingSeries::check_shape(const CouplingSeries& o) const {
  if (!(shape_ == o.shape_)) throw DomainError("coupling series: mismatched caps or valences");
}

CouplingSeries CouplingSeries::operator-() const {
  CouplingSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CouplingSeries CouplingSeries::operator+(const CouplingSeries& o) const {
  check_shape(o);
  CouplingSeries r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!o.coeffs_[i].is_zero()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.truncated_ = truncated_ || o.truncated_;
  return r;
}

CouplingSeries CouplingSeries::operator-(const CouplingSeries& o) const { return *this + (-o); }

CouplingSeries& CouplingSeries::operator+=(const CouplingSeries& o) {
  *this = *this + o;
  return *this;
}

CouplingSeries CouplingSeries::operator*(const CouplingSeries& o) const {
  check_shape(o);
  CouplingSeries r(shape_);
  r.truncated_ = truncated_ || o.truncated_;
  const std::size_t nv = shape_.caps.size();
  struct Slot {
    std::vector<int> e;
    int degree;
    const LaurentS* c;
  };
  auto nonzero = [&](const CouplingSeries& s) {
    std::vector<Slot> v;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (!s.coeffs_[i].is_zero()) v.push_back({s.exponents_of(i), s.total_degree_[i], &s.coeffs_[i]});
    }
    return v;
  };
  const auto a = nonzero(*this);
  const auto b = nonzero(o);
  std::vector<int> e(nv);
  for (const auto& x : a) {
    for (const auto& y : b) {
      bool inside = x.degree + y.degree <= shape_.total_cap;
      for (std::size_t i = 0; i < nv && inside; ++i) {
        e[i] = x.e[i] + y.e[i];
        inside = e[i] <= shape_.caps[i];
      }
      if (!inside) {
        r.truncated_ = true;
        continue;
      }
      r.coeffs_[r.index(e)] += (*x.c) * (*y.c);
    }
  }
  return r;
}

CouplingSeries CouplingSeries::operator*(const LaurentS& c) const {
  CouplingSeries r = *this;
  for (auto& x : r.coeffs_) {
    if (!x.is_zero()) x = x * c;
  }
  return r;
}

CouplingSeries CouplingSeries::times_monomial(const std::vector<int>& exponents, int s_shift,
                                              const Rational& c) const {
  CouplingSeries r(shape_);
  r.truncated_ = truncated_;
  if (c == 0) return r;
  std::vector<int> e(exponents.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto base = exponents_of(i);
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = base[j] + exponents[j];
    if (!r.in_range(e)) {
      r.truncated_ = true;
      continue;
    }
    r.coeffs_[r.index(e)] = coeffs_[i].shifted(s_shift) * c;
  }
  return r;
}

CouplingSeries CouplingSeries::invert() const {
  const LaurentS& c0 = coeffs_[0];
  if (c0.terms().size() != 1) throw DomainError("coupling series: constant term is not an invertible monomial");
  const auto [e0, k0] = c0.terms()[0];
  const LaurentS c0_inv = LaurentS::monomial(-e0, Rational(1 / k0));
  CouplingSeries u = *this * c0_inv;
  u.coeffs_[0] = LaurentS();
  // 1/(1+u) = sum (-u)^n; u has no constant part so n <= total_cap suffices.
  CouplingSeries term = constant(shape_, LaurentS(Rational(1)));
  CouplingSeries sum = term;
  const CouplingSeries neg_u = -u;
  for (int n = 1; n <= shape_.total_cap; ++n) {
    term = term * neg_u;
    sum += term;
  }
  return sum * c0_inv;
}

CouplingSeries CouplingSeries::compose_scalar(const std::vector<Rational>& poly) const {
  CouplingSeries acc(shape_);
  acc.truncated_ = truncated_;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = acc * *this;
    acc.coeffs_[0] += LaurentS(*it);
  }
  return acc;
}

bool operator==(const CouplingSeries& a, const CouplingSeries& b) {
  return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
}

}  // namespace genuskit
