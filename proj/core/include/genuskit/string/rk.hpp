#pragma once

#include <vector>

#include "genuskit/algebra/jet.hpp"
#include "genuskit/string/potential.hpp"

namespace genuskit {

// r_0 .. r_kmax as jet expressions; r[0] is the symbol xi. In the deformed
// context these are the coefficients of the Bleher-Its deformed expansion.
struct RkExpansion {
  JetContextPtr context;
  std::vector<JetExpr> r;

  bool deformed() const { return context->deformed(); }
  JetMode mode() const { return context->mode(); }
  int kmax() const { return static_cast<int>(r.size()) - 1; }
};

// Solves sum_j W_j U_{k,j} = 0 (plus 2(t-1) r_k when deformed) for r_k in
// the given context. kmax <= 5.
RkExpansion solve_rk(const JetContextPtr& ctx, int kmax);

// Generic contexts carry W symbols up to the order needed by f_kmax.
JetContextPtr generic_context(int kmax, bool deformed);

RkExpansion solve_rk(const WFunction& w, int kmax, JetMode mode);
RkExpansion solve_deformed_rk(const WFunction& w, int kmax, JetMode mode = JetMode::concrete);

}  // namespace genuskit
