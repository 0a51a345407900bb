#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace genuskit {

using Integer = mpz_class;
// Arithmetic keeps mpq_class canonical; the two-argument constructor does
// not, so build fractions of runtime integers with ratio().
using Rational = mpq_class;

Rational ratio(long num, long den);

// Parses "p", "-p", "p/q" or a finite decimal such as "0.125". Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
// (2n-1)!! with (-1)!! = 1.
Integer double_factorial_odd(unsigned n);

Rational pow(const Rational& base, int exponent);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace genuskit
