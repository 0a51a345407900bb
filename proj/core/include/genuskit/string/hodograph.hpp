#pragma once

#include <optional>
#include <vector>

#include "genuskit/algebra/real.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

struct HodographRoot {
  std::vector<Real> positive_roots;  // ascending
  std::vector<std::optional<Rational>> exact;
  // W'(r0) = 0 at some positive root (a multiple root of W - T).
  bool critical = false;

  bool unique() const { return positive_roots.size() == 1; }
  // The unique positive root; DomainError when there is none, or several
  // (one-cut uniqueness is not certified then).
  const Real& value() const;
};

// Positive roots of W(r0) = T for numeric W, certified by Sturm isolation and
// refined to `digits` significant digits.
HodographRoot hodograph_root(const WFunction& w, const Rational& T, unsigned digits);

}  // namespace genuskit
