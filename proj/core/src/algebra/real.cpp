#include "genuskit/algebra/real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "genuskit/errors.hpp"

namespace genuskit {

mpfr_prec_t digits_to_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& decimal, mpfr_prec_t bits) {
  Real r(bits);
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    throw ParseError("malformed decimal: '" + decimal + "'");
  }
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::log2(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.bits());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.bits());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

template <class Op>
Real unary(const Real& x, Op op) {
  Real r(x.bits());
  op(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

double Real::log10_abs() const {
  if (is_zero()) return -1.0e9;
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

std::string Real::to_string(unsigned digits) const {
  std::vector<char> buf(digits + 64);
  const std::string fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "Re";
  const int n = mpfr_snprintf(buf.data(), buf.size(), fmt.c_str(), v_);
  return std::string(buf.data(), static_cast<std::size_t>(std::max(n, 0)));
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive value");
  return unary(x, mpfr_log);
}
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real lgamma(const Real& x) {
  Real r(x.bits());
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long e) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Real root(const Real& x, unsigned long k) {
  Real r(x.bits());
#if MPFR_VERSION_MAJOR >= 4
  mpfr_rootn_ui(r.get(), x.get(), k, MPFR_RNDN);
#else
  mpfr_root(r.get(), x.get(), k, MPFR_RNDN);
#endif
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

}  // namespace genuskit
