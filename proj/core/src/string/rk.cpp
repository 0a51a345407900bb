#include "genuskit/string/rk.hpp"

#include "genuskit/errors.hpp"
#include "genuskit/string/u_table.hpp"

namespace genuskit {

JetContextPtr generic_context(int kmax, bool deformed) {
  // f_k reaches W^(3k+1) through the 2k-th T-derivative of r_0.
  return JetContext::generic(deformed, 3 * std::max(kmax, 1) + 2);
}

RkExpansion solve_rk(const JetContextPtr& ctx, int kmax) {
  if (kmax < 0 || kmax > 5) throw DomainError("solve_rk supports 0 <= kmax <= 5");
  if (ctx->D().is_zero()) throw DomainError("degenerate potential: D vanishes identically");
  RkExpansion out{ctx, {JetExpr(ctx, ctx->xi())}};
  if (kmax == 0) return out;

  const UCoeffTable table = derive_u_table(kmax);
  const RingPtr& jr = table.ring();
  // derivs[i][m] = d^m r_i / dT^m, filled on demand.
  std::vector<std::vector<Poly>> derivs;
  auto derivative = [&](int i, int m) -> const Poly& {
    auto& row = derivs[i];
    while (static_cast<int>(row.size()) <= m) row.push_back(ctx->derive(row.back()));
    return row[m];
  };
  derivs.push_back({ctx->xi()});
  std::vector<Poly> wnorm(3 * kmax + 1);
  for (int j = 2; j <= 3 * kmax; ++j) wnorm[j] = ctx->w_normalized(j);

  for (int k = 1; k <= kmax; ++k) {
    std::vector<Poly> images(jr->size(), Poly(ctx->ring()));
    for (int i = 0; i < k; ++i) {
      for (int m = 0; 2 * i + m <= 2 * k && m <= table.max_jet_order(i); ++m) {
        images[table.jet(i, m)] = derivative(i, m);
      }
    }
    Poly sum(ctx->ring());
    for (int j = 2; j <= 3 * k; ++j) {
      const Poly& u = table.entry(k, j);
      if (u.is_zero() || wnorm[j].is_zero()) continue;
      for (int m = 0; m <= table.max_jet_order(k); ++m) {
        if (u.depends_on(table.jet(k, m))) throw InternalInconsistency("U_{k,j>1} depends on r_k");
      }
      sum += wnorm[j] * u.compose(ctx->ring(), images);
    }
    Poly rk = -(ctx->delta() * sum);
    out.r.emplace_back(ctx, rk);
    derivs.push_back({rk});
  }
  return out;
}

RkExpansion solve_rk(const WFunction& w, int kmax, JetMode mode) {
  if (mode == JetMode::generic) return solve_rk(generic_context(kmax, false), kmax);
  return solve_rk(JetContext::concrete(false, w.poly), kmax);
}

RkExpansion solve_deformed_rk(const WFunction& w, int kmax, JetMode mode) {
  if (mode == JetMode::generic) return solve_rk(generic_context(kmax, true), kmax);
  return solve_rk(JetContext::concrete(true, w.poly), kmax);
}

}  // namespace genuskit
