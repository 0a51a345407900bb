#include "genuskit/finite_n/jacobi.hpp"

#include <cmath>

#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

constexpr unsigned kGuardDigits = 15;

struct Rule {
  std::vector<Real> x;  // nodes in (0, R)
  std::vector<Real> w;  // quadrature weight times exp(-N V(x)), doubled for the even extension
};

Real potential_at(const std::vector<std::pair<int, Rational>>& g, const Real& x) {
  const Real lambda = x * x;
  Real v(0L, x.bits());
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    v += Real(it->second, x.bits()) * pow(lambda, it->first);
  }
  return v;
}

// Smallest R (on a 1/8 grid) beyond which x^(2 n_max) exp(-N V(x)) is
// decreasing and below 10^-(digits + guard).
double tail_cutoff(const std::vector<std::pair<int, Rational>>& g, int N, int n_max, unsigned digits) {
  const double target = -(static_cast<double>(digits) + kGuardDigits) * std::log(10.0);
  auto V = [&](double x) {
    double v = 0;
    for (const auto& [n, c] : g) v += c.get_d() * std::pow(x * x, n);
    return v;
  };
  auto log_integrand = [&](double x) { return 2.0 * n_max * std::log(2.0 * x) - N * V(x); };
  for (double R = 1.0; R < 1e4; R += 0.125) {
    bool ok = true;
    // Check on a geometric grid out to 16 R that the bound keeps decreasing.
    double prev = log_integrand(R);
    if (prev > target) continue;
    for (double x = R * 1.0625; x < 16 * R && ok; x *= 1.0625) {
      const double cur = log_integrand(x);
      ok = cur <= prev && cur <= target;
      prev = cur;
    }
    if (ok) return R;
  }
  throw NumericError("no finite cutoff bounds the weight tail");
}

Rule tanh_sinh(const std::vector<std::pair<int, Rational>>& g, int N, const Real& R, int level, unsigned digits,
               mpfr_prec_t bits) {
  // x = R/2 (1 + tanh(pi/2 sinh t)), t = k h; the weight decays like
  // exp(-pi/2 e^|t|), so |t| <= tmax suffices for the working precision.
  const double tmax = std::log(4.0 / M_PI * (static_cast<double>(digits) + kGuardDigits + 5) * std::log(10.0)) + 0.5;
  const Real h = Real(1L, bits) / pow(Real(2L, bits), level);
  const Real half_pi = Real::pi(bits) / Real(2L, bits);
  const Real half_R = R / Real(2L, bits);
  const long kmax = static_cast<long>(std::ceil(tmax * std::ldexp(1.0, level)));
  Rule rule;
  for (long k = -kmax; k <= kmax; ++k) {
    const Real t = Real(k, bits) * h;
    const Real u = half_pi * sinh(t);
    const Real ch = cosh(u);
    const Real e2u = exp(u + u);
    // 1 + tanh(u) = 2 e^(2u) / (1 + e^(2u)), without cancellation for u < 0.
    const Real x = half_R * (Real(2L, bits) * e2u / (Real(1L, bits) + e2u));
    if (x.is_zero() || !(x < R)) continue;
    const Real dx = half_R * half_pi * cosh(t) / (ch * ch) * h;
    const Real weight = Real(2L, bits) * dx * exp(-(Real(static_cast<long>(N), bits) * potential_at(g, x)));
    rule.x.push_back(x);
    rule.w.push_back(weight);
  }
  return rule;
}

// Stieltjes on the discrete measure; returns r[0..n_max], h[0..n_max].
void stieltjes(const Rule& rule, int n_max, std::vector<Real>& r, std::vector<Real>& h, mpfr_prec_t bits) {
  const std::size_t M = rule.x.size();
  std::vector<Real> prev(M, Real(0L, bits));
  std::vector<Real> cur(M, Real(1L, bits));
  r.assign(static_cast<std::size_t>(n_max) + 1, Real(0L, bits));
  h.assign(static_cast<std::size_t>(n_max) + 1, Real(0L, bits));
  for (int n = 0; n <= n_max; ++n) {
    Real hn(0L, bits);
    for (std::size_t i = 0; i < M; ++i) hn += rule.w[i] * cur[i] * cur[i];
    if (!(hn.sign() > 0)) throw NumericError("Stieltjes: nonpositive norm");
    h[static_cast<std::size_t>(n)] = hn;
    if (n > 0) r[static_cast<std::size_t>(n)] = hn / h[static_cast<std::size_t>(n - 1)];
    if (n == n_max) break;
    const Real& rn = r[static_cast<std::size_t>(n)];
    for (std::size_t i = 0; i < M; ++i) {
      Real next = rule.x[i] * cur[i] - rn * prev[i];
      prev[i] = std::move(cur[i]);
      cur[i] = std::move(next);
    }
  }
}

Real orthogonality_defect(const Rule& rule, const std::vector<Real>& r, const std::vector<Real>& h, mpfr_prec_t bits) {
  const std::size_t M = rule.x.size();
  const std::size_t n = r.size();
  std::vector<std::vector<Real>> P(n, std::vector<Real>(M, Real(0L, bits)));
  for (std::size_t i = 0; i < M; ++i) {
    P[0][i] = Real(1L, bits);
    if (n > 1) P[1][i] = rule.x[i];
    for (std::size_t k = 2; k < n; ++k) P[k][i] = rule.x[i] * P[k - 1][i] - r[k - 1] * P[k - 2][i];
  }
  Real worst(0L, bits);
  // Odd-parity pairs integrate to zero exactly by symmetry.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 2; l < n; l += 2) {
      Real ip(0L, bits);
      for (std::size_t i = 0; i < M; ++i) ip += rule.w[i] * P[k][i] * P[l][i];
      worst = max(worst, abs(ip) / sqrt(h[k] * h[l]));
    }
  }
  return worst;
}

}  // namespace

JacobiData stieltjes_recurrence(const Potential& pot, int N, int n_max, unsigned digits) {
  if (!pot.is_numeric()) throw DomainError("finite-N numerics need numeric couplings");
  pot.validate();
  if (N < 1) throw DomainError("N must be positive");
  if (digits < 30) throw DomainError("finite-N numerics need at least 30 digits");
  if (n_max < 0) n_max = N + 2;
  if (n_max < 1) throw DomainError("n_max must be positive");
  std::vector<std::pair<int, Rational>> g;
  for (const auto& [n, c] : pot.couplings) {
    const Rational q = *pot.numeric(n);
    if (q != 0) g.emplace_back(n, q);
  }
  const mpfr_prec_t bits = digits_to_bits(digits + kGuardDigits);
  JacobiData jd;
  jd.potential = pot;
  jd.N = N;
  jd.n_max = n_max;
  jd.digits = digits;
  jd.cutoff = Real(Rational(tail_cutoff(g, N, n_max, digits)), bits);

  const Real tol = pow(Real(10L, bits), -static_cast<long>(digits) - 2);
  std::vector<Real> r_prev, h_prev;
  Rule rule_prev;
  for (int level = 3; level <= 12; ++level) {
    Rule rule = tanh_sinh(g, N, jd.cutoff, level, digits, bits);
    std::vector<Real> r, h;
    stieltjes(rule, n_max, r, h, bits);
    if (!r_prev.empty()) {
      Real diff(0L, bits);
      for (std::size_t n = 1; n < r.size(); ++n) diff = max(diff, abs(r[n] - r_prev[n]) / r[n]);
      diff = max(diff, abs(h[0] - h_prev[0]) / h[0]);
      if (diff < tol) {
        jd.level = level;
        jd.nodes = rule.x.size();
        jd.orthogonality_defect = orthogonality_defect(rule_prev, r, h_prev, bits);
        jd.r = std::move(r);
        jd.h = std::move(h);
        jd.s.assign(jd.r.size(), Real(0L, bits));
        const Real ortho_tol = pow(Real(10L, bits), -static_cast<long>(digits) + 10);
        if (!(jd.orthogonality_defect < ortho_tol)) throw NumericError("loss of orthogonality beyond tolerance");
        return jd;
      }
    }
    r_prev = std::move(r);
    h_prev = std::move(h);
    rule_prev = std::move(rule);
  }
  throw NumericError("tanh-sinh quadrature did not converge to the requested precision");
}

}  // namespace genuskit
