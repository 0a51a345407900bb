#include "genuskit/energy/xi_integrand.hpp"

#include <string>

#include "genuskit/errors.hpp"

namespace genuskit {

RingPtr xi_ring(int max_w_order) {
  std::vector<std::string> names{"xi", "sigma", "W"};
  for (int j = 2; j <= max_w_order; ++j) names.push_back("W" + std::to_string(j));
  return Ring::make(std::move(names));
}

namespace {

void check_k(const FIntegrandSeries& f, int k) {
  if (k < 1) throw DomainError("xi integrand needs k >= 1; F^(0) has its own closed form");
  if (k >= static_cast<int>(f.f.size())) throw DomainError("xi integrand: f series too short");
  if (!f.context->deformed()) throw DomainError("xi integrand needs the deformed context");
  if (f.f[k].poly().depends_on(f.context->t_index())) throw InternalInconsistency("f_k depends on t for k >= 1");
}

}  // namespace

XiIntegrand to_xi_integrand(const FIntegrandSeries& f, int k) {
  check_k(f, k);
  const JetContextPtr& ctx = f.context;
  if (ctx->mode() != JetMode::generic) throw DomainError("to_xi_integrand expects a generic context");
  const int M = ctx->max_w_order();
  const RingPtr ring = xi_ring(M);
  const Poly xi = Poly::variable(ring, std::size_t{0});
  const Poly sigma = Poly::variable(ring, std::size_t{1});
  const Poly W = Poly::variable(ring, std::size_t{2});
  std::vector<Poly> images(ctx->ring()->size(), Poly(ring));
  images[ctx->xi_index()] = xi;
  Monomial dm;
  dm.set(0, 1);
  dm.set(1, -1);
  images[ctx->delta_index()] = Poly::monomial(ring, dm, Rational(1));
  const std::size_t w1 = ctx->ring()->index("W1");
  if (f.f[k].poly().depends_on(w1)) throw InternalInconsistency("f_k depends on W' directly");
  for (int j = 2; j <= M; ++j) images[w1 + j - 1] = Poly::variable(ring, 1 + static_cast<std::size_t>(j));
  const Poly fk = f.f[k].poly().compose(ring, images);
  Monomial inv_xi3;
  inv_xi3.set(0, -3);
  const Poly factor = (W - Poly(ring, Rational(1))) * sigma;
  return {k, (fk * factor).mul_monomial(inv_xi3, Rational(1, 4))};
}

RatFunc to_xi_integrand_concrete(const FIntegrandSeries& f, int k) {
  check_k(f, k);
  const JetContextPtr& ctx = f.context;
  if (ctx->mode() != JetMode::concrete) throw DomainError("to_xi_integrand_concrete expects a concrete context");
  std::vector<std::string> names{"xi"};
  for (std::size_t i = 3; i < ctx->ring()->size(); ++i) names.push_back(ctx->ring()->name(i));
  const RingPtr ring = Ring::make(names);
  std::vector<Poly> embed(ctx->ring()->size(), Poly(ring));
  embed[ctx->xi_index()] = Poly::variable(ring, std::size_t{0});
  for (std::size_t i = 3; i < ctx->ring()->size(); ++i) embed[i] = Poly::variable(ring, i - 2);
  const Poly xi = embed[0];
  const Poly W = ctx->w_derivative(0).compose(ring, embed);
  const Poly W1 = ctx->w_derivative(1).compose(ring, embed);
  const Poly one(ring, Rational(1));
  const Poly sigma = one - W + xi * W1;
  const auto coeffs = f.f[k].poly().coefficients_in(ctx->delta_index());
  const int d = f.f[k].poly().degree(ctx->delta_index());
  // f_k = sum_b c_b (xi/sigma)^b = (sum_b c_b xi^b sigma^(d-b)) / sigma^d.
  Poly num(ring);
  Poly sp = one;
  for (int b = d; b >= 0; --b) {
    auto it = coeffs.find(b);
    if (it != coeffs.end()) num += it->second.compose(ring, embed) * xi.pow(static_cast<unsigned>(b)) * sp;
    if (b > 0) sp *= sigma;
  }
  const Poly top = num * (W - one);
  Poly den = sigma.pow(static_cast<unsigned>(std::max(d - 1, 0))) * xi.pow(3) * Rational(4);
  if (d == 0) return RatFunc(top * sigma, den);
  return RatFunc(top, den);
}

Poly xi_derivative(const Poly& p) {
  const RingPtr& ring = p.ring();
  const std::size_t n = ring->size();
  const Poly xi = Poly::variable(ring, std::size_t{0});
  const Poly sigma = Poly::variable(ring, std::size_t{1});
  const Poly W = Poly::variable(ring, std::size_t{2});
  Monomial inv_xi;
  inv_xi.set(0, -1);
  Poly out = p.partial(0);
  Poly ps = p.partial(1);
  if (!ps.is_zero()) out += ps * xi * Poly::variable(ring, std::size_t{3});
  Poly pw = p.partial(2);
  if (!pw.is_zero()) out += (pw * (sigma - Poly(ring, Rational(1)) + W)).mul_monomial(inv_xi, Rational(1));
  for (std::size_t v = 3; v < n; ++v) {
    const Poly pv = p.partial(v);
    if (pv.is_zero()) continue;
    if (v + 1 >= n) throw TruncationError("xi derivative needs W symbols beyond the ring");
    out += pv * Poly::variable(ring, v + 1);
  }
  return out;
}

}  // namespace genuskit
