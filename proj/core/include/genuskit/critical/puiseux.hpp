#pragma once

#include <string>
#include <vector>

#include "genuskit/algebra/real.hpp"
#include "genuskit/critical/criticality.hpp"
#include "genuskit/critical/painleve.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// sign * radicand^(1/root) * (t - 1)^(exponent/root), real branch.
struct PuiseuxTerm {
  int sign = 0;
  Rational radicand;
  int root = 1;
  int exponent = 0;

  // radicand^(1/root) when it is rational.
  std::optional<Rational> exact_coefficient() const;
  Real coefficient(mpfr_prec_t bits) const;
  std::string to_string(const std::string& var = "(t-1)") const;
  friend bool operator==(const PuiseuxTerm& a, const PuiseuxTerm& b) {
    return a.sign == b.sign && a.radicand == b.radicand && a.root == b.root && a.exponent == b.exponent;
  }
};

// Expansions at T = 1, t -> 1+ around a critical point of order m, in the
// local parameter sigma with sigma^m = kappa (t - 1), i.e. sigma is a real
// multiple of tau = (t - 1)^(1/m).
struct PuiseuxReport {
  int m = 0;
  Rational rc;
  Rational kappa;
  std::vector<Rational> r0_sigma;  // r0 - rc = sum_{i>=1} r0_sigma[i-1] sigma^i
  std::vector<PuiseuxTerm> r0_tau; // the same terms in powers of tau
  PuiseuxTerm r0_leading;          // of r0 - rc
  PuiseuxTerm r0pp_leading;        // second T-derivative of r0
  PuiseuxTerm r1_leading;
  Rational f0_constant;            // 2 r0^2 - 1/(2 t^2) at t = 1
  PuiseuxTerm f0_linear;           // its tau^1 term
};

// order = number of sigma terms kept in r0 - rc. Throws DomainError when no
// real expansion exists as t -> 1+ (even m with kappa < 0) or rc is inexact.
PuiseuxReport puiseux_at_critical(const WFunction& w, const CriticalData& crit, int order = 6);

// Leading eps-bar terms of the outer f0 (in tau = eps-bar y^(1/m)) and of the
// inner 4 r^[1] = 4 u(-2 rc y) from the formal tail, both in y^(1/m).
struct MatchingReport {
  PuiseuxTerm outer;
  PuiseuxTerm inner;
  bool matches = false;
};

MatchingReport match_inner_outer(const PuiseuxReport& outer, const FormalTailSeries& tail);

}  // namespace genuskit
