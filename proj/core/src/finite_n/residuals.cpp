#include "genuskit/finite_n/residuals.hpp"

#include <algorithm>
#include <cmath>

#include "genuskit/energy/closed_form.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/string/hodograph.hpp"

namespace genuskit {

namespace {

mpfr_prec_t bits_of(const JacobiData& jd) { return jd.r.at(1).bits(); }

// Coefficients of x^j P_n in the basis P_0 .. P_{n+j}, for j = 0..jmax.
std::vector<std::vector<Real>> powers_applied(const JacobiData& jd, int n, int jmax) {
  if (n + jmax > jd.n_max) throw TruncationError("band of x^j P_n exceeds n_max");
  const mpfr_prec_t bits = bits_of(jd);
  const std::size_t size = static_cast<std::size_t>(n + jmax) + 2;
  std::vector<std::vector<Real>> out;
  std::vector<Real> v(size, Real(0L, bits));
  v[static_cast<std::size_t>(n)] = Real(1L, bits);
  out.push_back(v);
  for (int j = 1; j <= jmax; ++j) {
    // x P_m = P_{m+1} + r_m P_{m-1}.
    std::vector<Real> w(size, Real(0L, bits));
    for (std::size_t m = 0; m + 1 < size; ++m) {
      if (v[m].is_zero()) continue;
      w[m + 1] += v[m];
      if (m >= 1) w[m - 1] += jd.r[m] * v[m];
    }
    v = std::move(w);
    out.push_back(v);
  }
  return out;
}

Real residual_max(const std::vector<Real>& v, mpfr_prec_t bits) {
  Real m(0L, bits);
  for (const auto& x : v) m = max(m, x);
  return m;
}

}  // namespace

Real lax_element(const JacobiData& jd, int j, int n, int m) {
  if (n < 0 || m < 0 || j < 0) throw DomainError("negative Lax matrix index");
  const auto p = powers_applied(jd, n, j);
  const auto& row = p[static_cast<std::size_t>(j)];
  if (static_cast<std::size_t>(m) >= row.size()) return Real(0L, bits_of(jd));
  return row[static_cast<std::size_t>(m)];
}

ResidualReport string_residual(const JacobiData& jd) {
  const mpfr_prec_t bits = bits_of(jd);
  const int p = jd.potential.half_degree();
  const int top = jd.n_max - (2 * p - 1);
  if (top < 1) throw TruncationError("n_max too small for the band of V_z(L)");
  ResidualReport rep;
  for (int n = 1; n <= top; ++n) {
    const auto pw = powers_applied(jd, n, 2 * p - 1);
    Real vz(0L, bits);
    for (const auto& [k, c] : jd.potential.couplings) {
      const Rational g = *jd.potential.numeric(k);
      if (g == 0) continue;
      vz += Real(Rational(2 * k) * g, bits) * pw[static_cast<std::size_t>(2 * k - 1)][static_cast<std::size_t>(n - 1)];
    }
    rep.n.push_back(n);
    rep.residual.push_back(abs(vz - Real(ratio(n, jd.N), bits)));
  }
  rep.max_residual = residual_max(rep.residual, bits);
  return rep;
}

ResolventReport resolvent_identity_check(const JacobiData& jd, int orders) {
  if (orders < 1) throw DomainError("orders must be positive");
  const mpfr_prec_t bits = bits_of(jd);
  const int band = 2 * orders - 1;
  // U_n needed for n_lo - 1 .. n_hi + 2.
  const int n_lo = 1;
  const int n_hi = jd.n_max - band - 2;
  if (n_hi < n_lo) throw TruncationError("n_max too small for the requested resolvent order");
  // a[n][k] = coefficient of lambda^-k in U_n, k = 0..orders.
  std::vector<std::vector<Real>> a;
  for (int n = 0; n <= n_hi + 2; ++n) {
    std::vector<Real> row(static_cast<std::size_t>(orders) + 1, Real(0L, bits));
    row[0] = Real(1L, bits);
    if (n >= 1) {
      const auto pw = powers_applied(jd, n, band);
      for (int k = 1; k <= orders; ++k) row[static_cast<std::size_t>(k)] = Real(2L, bits) * pw[static_cast<std::size_t>(2 * k - 1)][static_cast<std::size_t>(n - 1)];
    }
    a.push_back(std::move(row));
  }
  auto U = [&](int n, int k) -> const Real& { return a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]; };
  auto r = [&](int n) -> Real { return n == 0 ? Real(0L, bits) : jd.r[static_cast<std::size_t>(n)]; };

  ResolventReport rep;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  for (int j = 0; j < orders; ++j) {
    Real worst_q(0L, bits);
    Real worst_l(0L, bits);
    for (int n = n_lo; n <= n_hi; ++n) {
      // [lambda^-j] of r_n (U_n + U_{n-1})(U_n + U_{n+1}) and of lambda (U_n^2 - 1).
      Real lhs(0L, bits);
      for (int i = 0; i <= j; ++i) lhs += (U(n, i) + U(n - 1, i)) * (U(n, j - i) + U(n + 1, j - i));
      lhs *= r(n);
      Real rhs(0L, bits);
      for (int i = 0; i <= j + 1; ++i) rhs += U(n, i) * U(n, j + 1 - i);
      worst_q = max(worst_q, abs(lhs - rhs));
      const Real lin_l = U(n + 1, j + 1) - U(n, j + 1);
      const Real lin_r = r(n + 1) * (U(n + 2, j) + U(n + 1, j)) - r(n) * (U(n, j) + U(n - 1, j));
      worst_l = max(worst_l, abs(lin_l - lin_r));
    }
    rep.quadratic.n.push_back(j);
    rep.quadratic.residual.push_back(worst_q);
    rep.linear.n.push_back(j);
    rep.linear.residual.push_back(worst_l);
  }
  rep.quadratic.max_residual = residual_max(rep.quadratic.residual, bits);
  rep.linear.max_residual = residual_max(rep.linear.residual, bits);
  return rep;
}

DecayFit fit_decay(std::vector<int> N, std::vector<Real> deviation, unsigned digits) {
  if (N.size() != deviation.size() || N.size() < 2) throw DomainError("decay fit needs at least two N values");
  DecayFit fit;
  fit.N = std::move(N);
  fit.deviation = std::move(deviation);
  const double floor = -static_cast<double>(digits) + 5;
  for (std::size_t i = 0; i < fit.N.size(); ++i) {
    if (fit.deviation[i].is_zero() || fit.deviation[i].log10_abs() < floor) fit.precision_limited = true;
  }
  for (std::size_t i = 0; i + 1 < fit.N.size(); ++i) {
    if (fit.deviation[i].is_zero() || fit.deviation[i + 1].is_zero()) continue;
    const double lr = (fit.deviation[i].log10_abs() - fit.deviation[i + 1].log10_abs()) * std::log(10.0);
    fit.exponents.push_back(lr / std::log(static_cast<double>(fit.N[i + 1]) / fit.N[i]));
  }
  if (!fit.exponents.empty()) {
    const auto [lo, hi] = std::minmax_element(fit.exponents.begin(), fit.exponents.end());
    fit.spread = *hi - *lo;
  }
  return fit;
}

DecayFit asymptotic_compare(const std::vector<JacobiData>& data, const RkExpansion& rk, int K) {
  if (data.empty()) throw DomainError("no finite-N data");
  if (K < 0 || K > rk.kmax()) throw DomainError("K exceeds the computed r_k");
  if (rk.deformed() || rk.mode() != JetMode::concrete) throw DomainError("asymptotic_compare needs undeformed concrete r_k");
  const JacobiData& first = data.front();
  const WFunction w = build_W(first.potential);
  const unsigned digits = first.digits;
  const mpfr_prec_t bits = bits_of(first);
  const Real r0 = hodograph_root(w, Rational(1), digits + 10).value();
  // Values in the jet ring: xi = r0; delta has been eliminated; t unused.
  const auto& ring = rk.context->ring();
  std::vector<Real> values(ring->size(), Real(0L, bits));
  values[rk.context->xi_index()] = r0;
  values[rk.context->t_index()] = Real(1L, bits);
  const std::function<Real(const Rational&)> lift = [bits](const Rational& q) { return Real(q, bits); };
  std::vector<Real> rk_values;
  for (int k = 0; k <= K; ++k) {
    const RatFunc f = rk.r[static_cast<std::size_t>(k)].to_ratfunc();
    rk_values.push_back(f.num().evaluate(values, lift) / f.den().evaluate(values, lift));
  }
  std::vector<int> Ns;
  std::vector<Real> dev;
  for (const auto& jd : data) {
    if (jd.N > jd.n_max) throw TruncationError("r_{N,N} needs n_max >= N");
    Real sum(0L, bits);
    const Real eps2 = Real(1L, bits) / Real(static_cast<long>(jd.N) * jd.N, bits);
    Real p(1L, bits);
    for (int k = 0; k <= K; ++k) {
      sum += rk_values[static_cast<std::size_t>(k)] * p;
      p *= eps2;
    }
    Ns.push_back(jd.N);
    dev.push_back(abs(jd.r[static_cast<std::size_t>(jd.N)] - sum));
  }
  if (Ns.size() < 2) {
    DecayFit fit;
    fit.N = Ns;
    fit.deviation = dev;
    return fit;
  }
  return fit_decay(std::move(Ns), std::move(dev), digits);
}

FreeEnergyReport free_energy_biz(const JacobiData& jd, int kmax) {
  if (kmax < 0 || kmax > 3) throw DomainError("free_energy_biz supports kmax <= 3");
  if (jd.h.empty() || jd.n_max < jd.N - 1) throw DomainError("free energy needs h_0 and r_1 .. r_{N-1}");
  const mpfr_prec_t bits = bits_of(jd);
  const int N = jd.N;
  const Real NN(static_cast<long>(N), bits);
  FreeEnergyReport rep;
  rep.N = N;
  Real sum = log(jd.h[0]);
  for (int n = 1; n < N; ++n) sum += Real(ratio(N - n, N), bits) * log(jd.r[static_cast<std::size_t>(n)]);
  const Real ln_fact_N = lgamma(Real(static_cast<long>(N) + 1, bits));
  rep.F_N = -(ln_fact_N / (NN * NN)) - sum / NN;
  // F_N^G = -N^-2 ln((2 pi)^(N/2) (2N)^(-N^2/2) prod_{n<=N} n!).
  Real ln_prod(0L, bits);
  for (int n = 1; n <= N; ++n) ln_prod += lgamma(Real(static_cast<long>(n) + 1, bits));
  const Real two_pi = Real(2L, bits) * Real::pi(bits);
  const Real lnZ = NN / Real(2L, bits) * log(two_pi) - NN * NN / Real(2L, bits) * log(Real(2L, bits) * NN) + ln_prod;
  rep.F_gauss = -(lnZ / (NN * NN));
  rep.difference = rep.F_N - rep.F_gauss;

  const WFunction w = build_W(jd.potential);
  const Real r0 = hodograph_root(w, Rational(1), jd.digits + 10).value();
  Real partial(0L, bits);
  Real p(1L, bits);
  const Real eps2 = Real(1L, bits) / (NN * NN);
  for (int k = 0; k <= kmax; ++k) {
    partial += closed_form_F(k, w).evaluate({r0}) * p;
    p *= eps2;
    rep.partial_sums.push_back(partial);
    rep.deviations.push_back(abs(rep.difference - partial));
  }
  return rep;
}

}  // namespace genuskit
