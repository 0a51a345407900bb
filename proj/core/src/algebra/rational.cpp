#include "genuskit/algebra/rational.hpp"

#include <cctype>

#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("malformed rational: empty string");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)), text);
    std::string_view den_text = trim(s.substr(slash + 1));
    if (!all_digits(den_text)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw ParseError("malformed rational (zero denominator): '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac)) ||
        (int_part.empty() && frac.empty())) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    Integer digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational q(negative ? Integer(-digits) : digits, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer double_factorial_odd(unsigned n) {
  Integer r = 1;
  for (unsigned i = 1; i < 2 * n; i += 2) r *= i;
  return r;
}

Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

}  // namespace genuskit
