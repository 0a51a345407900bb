#pragma once

#include <vector>

#include "genuskit/algebra/jet.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {

// Coefficients f_k of f = r (r(T - eps) + r(T + eps)) - 1/(2 t^2) in the
// deformed context; f_0 carries the -1/(2 t^2) term as a Laurent monomial.
struct FIntegrandSeries {
  JetContextPtr context;
  std::vector<JetExpr> f;
};

// kmax must not exceed rk.kmax(). Requires a deformed expansion.
FIntegrandSeries assemble_f(const RkExpansion& rk, int kmax);

}  // namespace genuskit
