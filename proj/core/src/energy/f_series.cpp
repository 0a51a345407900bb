#include "genuskit/energy/f_series.hpp"

#include "genuskit/errors.hpp"

namespace genuskit {

FIntegrandSeries assemble_f(const RkExpansion& rk, int kmax) {
  if (!rk.deformed()) throw DomainError("assemble_f needs the deformed expansion");
  if (kmax < 0 || kmax > rk.kmax()) throw DomainError("assemble_f: rk expansion is too short");
  const JetContextPtr& ctx = rk.context;
  std::vector<JetExpr> r(rk.r.begin(), rk.r.begin() + kmax + 1);
  const EpsilonSeries series(r, kmax);
  const EpsilonSeries product = series * series.symmetric_shift(1);
  FIntegrandSeries out{ctx, product.coefficients()};
  const Poly t_inv2 = Poly::variable(ctx->ring(), ctx->t_index(), -2);
  out.f[0] = out.f[0] - JetExpr(ctx, t_inv2 / Rational(2));
  return out;
}

}  // namespace genuskit
