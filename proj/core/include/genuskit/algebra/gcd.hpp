#pragma once

#include "genuskit/algebra/poly.hpp"

namespace genuskit {

// Greatest common divisor over Q[x1..xn], normalized to an integer primitive
// polynomial with positive leading coefficient. gcd(0, 0) = 0. Inputs must not
// carry negative exponents.
Poly gcd(const Poly& a, const Poly& b);

// Largest monomial dividing every term (entrywise minimum of exponents).
Monomial monomial_content(const Poly& p);

// Pseudo-remainder of a by b with respect to one variable.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var);

}  // namespace genuskit
