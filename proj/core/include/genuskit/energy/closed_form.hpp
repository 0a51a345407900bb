#pragma once

#include <string>
#include <utility>
#include <vector>

#include "genuskit/algebra/ratfunc.hpp"
#include "genuskit/algebra/real.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// Ring of generic closed forms: r0 and Wj = W^(j)(r0), j = 1..7.
RingPtr closed_form_ring();

struct LogTerm {
  Rational coeff;
  Poly arg;
};

// F^(k) for a generic potential on the hodograph W(r0) = 1: a Laurent
// polynomial in r0 and W' plus logarithms.
struct GenericClosedForm {
  int k = 0;
  Poly rational;
  std::vector<LogTerm> logs;
};

// k = 1, 2, 3.
GenericClosedForm generic_closed_form(int k);
// F^(3) with the coefficient of W^(4) W'^2 W'' in the 1/725760 block set
// to `c` (300 in the accepted form; 388 is the competing literature value).
GenericClosedForm generic_closed_form_F3(const Rational& c);

// F^(k) for a concrete W over the model ring {r0, couplings...}.
struct ClosedFormF {
  int k = 0;
  RatFunc rational;
  std::vector<std::pair<Rational, RatFunc>> logs;

  // Values in model-ring order. Throws DomainError for a nonpositive log
  // argument or a vanishing denominator.
  Real evaluate(const std::vector<Real>& values) const;
  std::string to_string() const;
};

// W's ring with xi renamed to r0.
RingPtr model_ring(const WFunction& w);
// W^(j) at r0 over the model ring.
Poly w_at_r0(const WFunction& w, int j);

// k = 0..3. k = 0 integrates (W - W^2/2)/xi exactly.
ClosedFormF closed_form_F(int k, const WFunction& w);
ClosedFormF specialize(const GenericClosedForm& form, const WFunction& w);

// a == b after imposing W(r0) = 1: the last coupling symbol of W is
// eliminated (W is linear in it); a W without symbols is handled by
// reduction modulo W(r0) - 1. Logarithms are compared through the product
// of their arguments raised to integer multiples of the coefficients.
bool equal_on_hodograph(const ClosedFormF& a, const ClosedFormF& b, const WFunction& w);

}  // namespace genuskit
