#pragma once

#include "genuskit/algebra/ratfunc.hpp"
#include "genuskit/energy/f_series.hpp"

namespace genuskit {

// Ring for generic integrands after the change of variable t -> xi:
// {xi, sigma, W, W2, ..., WM} with sigma = 1 - W + xi W'. W' is eliminated
// through W' = (sigma - 1 + W)/xi, so integrands are Laurent polynomials in
// xi and sigma.
RingPtr xi_ring(int max_w_order);

// R_k with F^(k) = integral_0^{r0} R_k dxi, from (1 - t) f_k dt along
// t = 1 + (1 - W(xi))/(2 xi): R_k = (W - 1) sigma f_k / (4 xi^3) with
// delta = xi/sigma.
struct XiIntegrand {
  int k = 0;
  Poly laurent;  // over xi_ring
};

// Generic (deformed) context only; k >= 1.
XiIntegrand to_xi_integrand(const FIntegrandSeries& f, int k);
// Concrete (deformed) context; result over {xi, couplings...}.
RatFunc to_xi_integrand_concrete(const FIntegrandSeries& f, int k);

// d/dxi on xi_ring: xi -> 1, sigma -> xi W2, W -> (sigma - 1 + W)/xi,
// Wj -> W(j+1).
Poly xi_derivative(const Poly& p);

}  // namespace genuskit
