#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genuskit/algebra/real.hpp"
#include "genuskit/algebra/upoly.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

enum class Phase { one_cut_regular, two_cut, critical_boundary, undetermined };
enum class DeformationFate { stays_one_cut, crosses_at, singular_at_start, undetermined };

std::string to_string(Phase p);
std::string to_string(DeformationFate f);

struct PhaseVerdict {
  Phase phase = Phase::undetermined;
  DeformationFate fate = DeformationFate::undetermined;
  std::string region;                 // e.g. "G1(1)", "G2", "cone", "curve"
  std::optional<Real> t0;             // crosses_at only
  std::optional<Rational> t0_exact;   // when sqrt(g4) is rational
  std::vector<std::string> details;
};

// Quartic V = g2 lambda + g4 lambda^2, g4 > 0. Exact predicates; t0 is
// reported to `digits` digits.
PhaseVerdict classify_quartic(const Rational& g2, const Rational& g4, unsigned digits = 50);

// Sixtic V = g2 lambda + g4 lambda^2 + g6 lambda^3 with g2 > 0, g6 > 0 and
// either g4 < 0 (cone/curve criterion) or g4 >= 0 (convexity).
PhaseVerdict sixtic_one_cut_check(const Rational& g2, const Rational& g4, const Rational& g6);

// Bleher-Its deformation of V/T: g2 -> (1 - 1/t) + g2/(t T), g_{2j} -> g_{2j}/(t^j T).
Potential deformed_potential(const Potential& pot, const Rational& T, const Rational& t);

struct EndpointReport {
  Real r0;
  Real alpha;              // 2 sqrt(r0)
  std::optional<Rational> r0_exact;
  UPoly h;                 // h as a polynomial in lambda = x^2, with A = alpha^2 exact or a rational enclosure
  bool h_positive = false; // h > 0 on [0, alpha^2], Sturm-certified
  bool singular = false;   // h vanishes at the endpoint
  Real h_at_endpoint;
  Real h_min_sampled;
  std::string verdict;     // "regular" or "singular"
};

// One-cut ansatz: r0 from W(r0) = T, alpha = 2 sqrt(r0), h from the
// polynomial part of V_z / sqrt(z^2 - alpha^2) divided by T. Throws
// DomainError when there is no unique positive root or h changes sign in
// (0, alpha^2).
EndpointReport endpoint_solve_one_cut(const Potential& pot, const Rational& T, unsigned digits = 50);

// h(lambda) for a given A = alpha^2 (exact).
UPoly h_polynomial(const Potential& pot, const Rational& T, const Rational& A);

std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace genuskit
