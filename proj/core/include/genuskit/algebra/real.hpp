#pragma once

#include <mpfr.h>

#include <string>

#include "genuskit/algebra/rational.hpp"

namespace genuskit {

// Converts significant decimal digits to an MPFR bit precision.
mpfr_prec_t digits_to_bits(unsigned digits);

// Arbitrary-precision binary float. Every value carries its own precision;
// binary operations round to the larger precision of the operands, so there is
// no process-wide default to manage.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  static Real from_string(const std::string& decimal, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real log2(mpfr_prec_t bits);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log10 |x| (−infinity-like large negative value for zero).
  double log10_abs() const;

  // Scientific decimal with the given number of significant digits.
  std::string to_string(unsigned digits) const;

 private:
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real lgamma(const Real& x);  // log |Γ(x)|
Real pow(const Real& x, long e);
Real root(const Real& x, unsigned long k);  // real k-th root, odd k allowed for x < 0
Real max(const Real& a, const Real& b);

}  // namespace genuskit
