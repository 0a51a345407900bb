#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genuskit/algebra/coupling_series.hpp"
#include "genuskit/algebra/real.hpp"
#include "genuskit/critical/criticality.hpp"
#include "genuskit/critical/diffpoly.hpp"

namespace genuskit {

// U[k] = U^{[k,k]}(u), from d/dx U^{[k+1,k+1]} = (rc d^3 + 4u d + 2u') U^{[k,k]}
// with U^{[0,0]} = 1 and zero integration constants. With rc unset, "rc" is
// a constant symbol of the ring.
struct GelfandDikii {
  std::shared_ptr<const DiffRing> ring;
  std::vector<Poly> U;
};

GelfandDikii gelfand_dikii(int kmax, const std::optional<Rational>& rc = std::nullopt);

// W_m(rc) U^{[m,m]}(u) = x_coeff x + y_coeff y.
struct PainleveMember {
  int m = 0;
  Rational rc;
  Rational wm;
  std::shared_ptr<const DiffRing> ring;  // jets of u, max order 2m
  Poly lhs;
  Rational x_coeff;
  Rational y_coeff;

  // Scaled so that the highest derivative u^(2m-2) has coefficient 1.
  PainleveMember normalized() const;
  // Naming in which m = 2 is P-I itself, e.g. m = 3 is the "second member".
  std::string alias() const;
  // "lhs = rhs"; with_y = false prints the y = 0 slice.
  std::string to_string(bool with_y = true) const;
};

// Throws DomainError for m < 2, m != crit.m, or inexact rc / W_m.
PainleveMember painleve_member(int m, const CriticalData& crit);

// u(x) = sum_n a_n z^(1 - (2m+1) n), z = (direction x)^(1/m), matched
// against the y = 0 slice as direction x -> +inf.
struct FormalTailSeries {
  int m = 0;
  int direction = 1;
  std::vector<Rational> a;
  LaurentS residual;  // lhs - rhs in powers of z

  // Per retained term the residual drops by (2m+1)/m in x.
  Rational step() const { return ratio(2 * m + 1, m); }
  // Leading x-exponent of the residual; none when it vanishes identically.
  std::optional<Rational> residual_exponent() const;
  // Real branch of z (odd m allows direction * x < 0).
  Real evaluate(const Real& x) const;
};

FormalTailSeries formal_tail_series(const PainleveMember& member, int terms);

// k = 0: W_m U^{[m,m]}(r1) - (x - 2 rc y); k >= 1: the inner equation
// 2 y r_k + sum_{j=m}^{m+k} W_j(rc) U^{[m+k, j]}(r1, ..., r_{k+1}).
struct TripleScalingSystem {
  std::shared_ptr<const DiffRing> ring;  // constants {y}, independent x, functions r1..r_{kmax+1}
  std::vector<Poly> equations;

  std::string to_string(int k) const { return ring->format(equations.at(static_cast<std::size_t>(k))) + " = 0"; }
};

// Needs rational rc and W-derivatives; m + kmax <= 6. `w` supplies W_j(rc)
// for j > m.
TripleScalingSystem triple_scaling_system(int kmax, const CriticalData& crit, const WFunction& w);

// Canonical potential W = 1 - (1 - xi/rc)^m with a critical point of order
// m at rc (BMP for m = 3, rc = 1).
WFunction canonical_critical_W(int m, const Rational& rc);

}  // namespace genuskit
