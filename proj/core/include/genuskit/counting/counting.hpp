#pragma once

#include <map>
#include <vector>

#include "genuskit/algebra/coupling_series.hpp"
#include "genuskit/energy/f_series.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// Couplings t_2, t_4, ... of V = lambda/2 + sum t_{2j} lambda^j, mapped to
// g_2 = 1 + 2 t_2 and g_{2k} = 2^k t_{2k} (k >= 2).
struct TCouplingChart {
  std::vector<int> valences;  // strictly increasing even numbers >= 2

  explicit TCouplingChart(std::vector<int> valences);

  // Coefficient of xi^n in W as a series in the t-couplings.
  CouplingSeries w_coefficient(const CouplingSeries::Shape& shape, int n) const;
  // binom(2j, j) j 2^(j-1): coefficient of (t_{2j}/t) r0^j in the deformed hodograph equation.
  static Rational hodograph_coefficient(int j);
  // The potential at given t values (one per valence).
  Potential potential_at(const std::vector<Rational>& t) const;
  int max_half_degree() const { return valences.back() / 2; }
};

// Per-valence exponent caps plus a cap on the total vertex count.
CouplingSeries::Shape counting_shape(const TCouplingChart& chart, const std::vector<int>& caps, int total_cap);

// r0 = s/2 - sum_j c_j t_{2j} s r0^j with s = 1/t, by graded fixed-point
// iteration (each pass fixes one more total degree).
CouplingSeries solve_r0_series(const TCouplingChart& chart, const CouplingSeries::Shape& shape);

// f_k with r0 -> series, delta -> 1/D expanded in s, W^(j) -> W^(j)(r0).
// `f` must be the generic deformed integrand series.
CouplingSeries f_series(const FIntegrandSeries& f, int k, const TCouplingChart& chart, const CouplingSeries& r0s);

// The generic deformed f_0..f_kmax, computed once per process and cached.
const FIntegrandSeries& generic_deformed_f(int kmax);

// integral_1^inf (1 - t) f dt term by term; keys are exponent vectors of
// nonconstant coupling monomials. Throws InternalInconsistency when a
// coupling-free part survives or a monomial diverges (t^(-m), m <= 2).
std::map<std::vector<int>, Rational> integrate_t(const CouplingSeries& series);

struct KappaTable {
  std::vector<int> valences;
  int genus_max = 0;
  std::vector<int> caps;
  int total_cap = 0;
  std::map<int, std::map<std::vector<int>, Integer>> entries;  // k -> n -> kappa

  // Zero for vectors inside the caps that never appeared.
  Integer at(int k, const std::vector<int>& n) const;
  std::vector<std::vector<int>> vectors() const;  // all n inside the caps, lexicographic
};

// kappa_k(n) = -(prod n_j!) (-1)^(sum n) [t^n] F^(k); throws
// InternalInconsistency for a non-integer or negative value.
std::map<std::vector<int>, Integer> extract_kappa(const std::map<std::vector<int>, Rational>& taylor);

KappaTable count_maps(const std::vector<int>& valences, const std::vector<int>& caps, int total_cap, int genus_max);

}  // namespace genuskit
