#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/real.hpp"

namespace genuskit {

// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  // Extracts a polynomial in a single variable of a multivariate ring.
  static UPoly from_poly(const Poly& p, std::size_t var);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& k) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly derivative() const;
  UPoly monic() const;

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;

  Poly to_poly(const RingPtr& ring, std::size_t var) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly square_free_part(const UPoly& p);
int root_multiplicity(const UPoly& p, const Rational& x);

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Number of distinct real roots in (a, b].
int count_roots(const std::vector<UPoly>& sturm, const Rational& a, const Rational& b);
// Every real root has absolute value below this bound.
Rational root_bound(const UPoly& p);

struct RootInterval {
  Rational lo;  // the root lies in (lo, hi]
  Rational hi;
  std::optional<Rational> exact;  // set when the root is rational
};

// Isolates the distinct real roots of p in (lo, hi], ascending.
std::vector<RootInterval> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi);
// Shrinks an isolating interval of a square-free polynomial below 2^-bits.
RootInterval refine(const UPoly& p, RootInterval iv, mpfr_prec_t bits);
Real root_value(const UPoly& p, const RootInterval& iv, mpfr_prec_t bits);

}  // namespace genuskit
