#pragma once

#include <optional>
#include <vector>

#include "genuskit/finite_n/jacobi.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {

struct ResidualReport {
  std::vector<int> n;          // rows checked (string equation) or orders (resolvent)
  std::vector<Real> residual;  // nonnegative
  Real max_residual;
};

// |V_z(L)_{n,n-1} - n/N| for 1 <= n <= n_max - (2p - 1).
ResidualReport string_residual(const JacobiData& jd);

// (L^j)_{n,m}: coefficient of P_m in x^j P_n, from the recurrence.
Real lax_element(const JacobiData& jd, int j, int n, int m);

struct ResolventReport {
  // Indexed by the power of 1/lambda, 0 .. orders-1; maxima over n.
  ResidualReport quadratic;
  ResidualReport linear;
  int n_lo = 0;
  int n_hi = 0;
};

// U_n = 1 + 2 sum_{k<=orders} (L^(2k-1))_{n,n-1} lambda^-k checked against
//   r_n (U_n + U_{n-1})(U_n + U_{n+1}) = lambda (U_n^2 - 1)
//   lambda (U_{n+1} - U_n) = r_{n+1}(U_{n+2} + U_{n+1}) - r_n (U_n + U_{n-1})
// coefficient by coefficient. Throws TruncationError when n_max is too small.
ResolventReport resolvent_identity_check(const JacobiData& jd, int orders);

// Least-squares-free decay fit: exponents[i] = log(d_i / d_{i+1}) / log(N_{i+1} / N_i).
struct DecayFit {
  std::vector<int> N;
  std::vector<Real> deviation;
  std::vector<double> exponents;
  double spread = 0;            // max - min of the pairwise exponents (0 for a single pair)
  bool precision_limited = false;  // a deviation sits at the working-precision floor
};

DecayFit fit_decay(std::vector<int> N, std::vector<Real> deviation, unsigned digits);

// |r_{N,N} - sum_{k<=K} r_k(T = 1) N^-2k| for each data set (all from the same
// potential), with the fitted decay exponent; expected near 2(K + 1).
DecayFit asymptotic_compare(const std::vector<JacobiData>& data, const RkExpansion& rk, int K);

struct FreeEnergyReport {
  int N = 0;
  Real F_N;
  Real F_gauss;
  Real difference;                 // F_N - F_N^G
  std::vector<Real> partial_sums;  // sum_{k<=K} F^(k) N^-2k, K = 0..kmax
  std::vector<Real> deviations;    // |difference - partial_sums[K]|
};

// F_N from r_1..r_{N-1} and h_0, minus the Gaussian value, against the
// closed forms F^(0..kmax) at r0(T = 1). kmax <= 3.
FreeEnergyReport free_energy_biz(const JacobiData& jd, int kmax = 3);

}  // namespace genuskit
