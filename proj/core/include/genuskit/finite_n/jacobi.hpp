#pragma once

#include <vector>

#include "genuskit/algebra/real.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// Recurrence data of the monic orthogonal polynomials for exp(-N V(x)) dx:
// x P_n = P_{n+1} + s_n P_n + r_n P_{n-1}, h_n = <P_n, P_n>.
struct JacobiData {
  Potential potential;
  int N = 0;
  int n_max = 0;
  unsigned digits = 0;
  std::vector<Real> r;  // r[0] = 0, r[n] for 1 <= n <= n_max
  std::vector<Real> h;  // h[n], 0 <= n <= n_max
  std::vector<Real> s;  // all zero for an even weight

  // Quadrature diagnostics.
  Real cutoff;                // integration on [-cutoff, cutoff]
  int level = 0;              // tanh-sinh step 2^-level
  std::size_t nodes = 0;      // nodes on the half line
  Real orthogonality_defect;  // max |<P_k, P_l>| / sqrt(h_k h_l), k != l
};

// Stieltjes construction on a tanh-sinh discretization of the weight,
// refined until successive levels agree to `digits` digits. n_max defaults
// to N + 2. Throws NumericError when the levels do not converge or the
// tail cannot be bounded; DomainError for a non-numeric potential,
// digits < 30, or N < 1.
JacobiData stieltjes_recurrence(const Potential& pot, int N, int n_max = -1, unsigned digits = 50);

}  // namespace genuskit
