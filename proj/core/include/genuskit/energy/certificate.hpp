#pragma once

#include <string>

#include "genuskit/energy/closed_form.hpp"
#include "genuskit/energy/xi_integrand.hpp"

namespace genuskit {

// R_k from the generic deformed pipeline (r_k -> f_k -> change of variable).
XiIntegrand generic_xi_integrand(int k);

struct Certificate {
  int k = 0;
  bool holds = false;
  Poly residual;      // d/dxi G - R_k over xi_ring
  bool vanishes_at_zero = false;  // G(0) = 0, so the integral starts at 0

  std::string to_string() const;
};

// The closed form only holds on W(r0) = 1. Off the hodograph it is carried
// to H(xi) by r0 -> xi, W' -> sigma/xi (which agrees with W' when W = 1),
// and G = H - (W - 1) xi H'/sigma is an antiderivative of R_k with G(0) = 0
// and G(r0) = F^(k). The certificate checks both exactly.
Certificate verify_total_derivative(const GenericClosedForm& form, const XiIntegrand& R);
Certificate verify_total_derivative(int k);

// The antiderivatives printed alongside R_1 and R_2 (in W', W'', ...
// notation), differentiated and compared with the pipeline integrand.
Certificate verify_printed_antiderivative(int k);
// The printed integrands R_1 and R_2 (in normalized W_j notation) against
// the pipeline.
bool printed_integrand_matches(int k);

}  // namespace genuskit
