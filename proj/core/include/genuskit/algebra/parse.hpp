#pragma once

#include <string_view>

#include "genuskit/algebra/poly.hpp"

namespace genuskit {

// Parses a (Laurent) polynomial written with + - * / ^ and parentheses over
// the symbols of `ring`, e.g. "7*r0*W2^3/(360*W1^5) - 1/240". Division and
// negative powers are allowed only by monomials. Identifiers may contain
// apostrophes ("r0''"). Throws ParseError.
Poly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace genuskit
