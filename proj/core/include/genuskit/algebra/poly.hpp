#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genuskit/algebra/rational.hpp"

namespace genuskit {

inline constexpr std::size_t kMaxVariables = 48;

// Ordered symbol list. Two rings are interchangeable iff their names agree.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);
  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError when the symbol is absent.
  std::size_t index(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector; negative entries are allowed (Laurent monomials).
class Monomial {
 public:
  Monomial() { exp_.fill(0); }

  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);
  int degree() const { return degree_; }
  bool is_one() const;
  bool has_negative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o with nonnegative quotient
  static Monomial gcd(const Monomial& a, const Monomial& b);  // entrywise minimum

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }
  // Graded lexicographic: larger total degree first, ties broken lexicographically.
  friend bool grlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
    return a.exp_ > b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVariables> exp_;
  std::int32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Sparse multivariate (Laurent) polynomial over Q. Terms are kept sorted in
// descending graded-lex order with no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, const Rational& c);
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly variable(RingPtr ring, std::size_t index, int power = 1);
  static Poly variable(RingPtr ring, std::string_view name, int power = 1);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_term() const;
  const Term& leading_term() const;
  bool has_negative_exponents() const;

  int degree(std::size_t var) const;      // max exponent; 0 for the zero polynomial
  int min_degree(std::size_t var) const;  // min exponent; 0 for the zero polynomial
  int total_degree() const;
  bool depends_on(std::size_t var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator/(const Rational& c) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly mul_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly partial(std::size_t var) const;
  // Coefficients with respect to one variable, keyed by exponent.
  std::map<int, Poly> coefficients_in(std::size_t var) const;
  Poly coefficient(std::size_t var, int exponent) const;

  // Replaces every variable i of this ring by images[i], a polynomial over
  // `target`. Negative exponents require monomial images.
  Poly compose(const RingPtr& target, const std::vector<Poly>& images) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  // Re-expresses the polynomial in another ring that contains all its symbols.
  Poly embed(const RingPtr& target) const;

  // Exact division by a polynomial; std::nullopt if the division is not exact.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Integer-coefficient primitive form with positive leading coefficient and
  // the rational factor that was divided out: *this == factor * result.
  std::pair<Rational, Poly> primitive_integer_form() const;

  template <class V>
  V evaluate(const std::vector<V>& values, const std::function<V(const Rational&)>& from_rational) const;

  std::string to_string() const;

 private:
  void normalize();
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly operator*(const Rational& c, const Poly& p);

template <class V>
V Poly::evaluate(const std::vector<V>& values, const std::function<V(const Rational&)>& from_rational) const {
  V total = from_rational(Rational(0));
  const std::size_t n = ring_ ? ring_->size() : 0;
  for (const auto& [m, c] : terms_) {
    V term = from_rational(c);
    for (std::size_t i = 0; i < n; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      V p = values[i];
      for (int k = 1; k < (e < 0 ? -e : e); ++k) p = V(p * values[i]);
      term = e > 0 ? V(term * p) : V(term / p);
    }
    total = V(total + term);
  }
  return total;
}

}  // namespace genuskit
