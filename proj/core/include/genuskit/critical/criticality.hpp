#pragma once

#include <optional>

#include "genuskit/algebra/real.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// W(rc) = 1, W^(j)(rc) = 0 for 1 <= j < m, W^(m)(rc) != 0.
struct CriticalData {
  Real rc;
  std::optional<Rational> rc_exact;
  int m = 0;
  Real wm;                            // W_m(rc) = W^(m)(rc) / (2^m (2m-1)!!)
  std::optional<Rational> wm_exact;

  // Throws DomainError unless rc and W_m(rc) are rational.
  const Rational& exact_rc() const;
  const Rational& exact_wm() const;
};

// The smallest positive critical point of W - 1, or none (regular case).
// Roots are isolated exactly by Sturm sequences on gcd(W - 1, W').
std::optional<CriticalData> detect_criticality(const WFunction& w, unsigned digits = 50);

// rc given by the caller (m and W_m still from W).
CriticalData critical_data_at(const WFunction& w, const Rational& rc);

}  // namespace genuskit
