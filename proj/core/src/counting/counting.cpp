#include "genuskit/counting/counting.hpp"

#include <mutex>

#include "genuskit/errors.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {

TCouplingChart::TCouplingChart(std::vector<int> v) : valences(std::move(v)) {
  if (valences.empty()) throw DomainError("at least one valence is required");
  for (std::size_t i = 0; i < valences.size(); ++i) {
    if (valences[i] < 2 || valences[i] % 2 != 0) throw DomainError("valences must be even and at least 2");
    if (i > 0 && valences[i] <= valences[i - 1]) throw DomainError("valences must be strictly increasing");
  }
}

Rational TCouplingChart::hodograph_coefficient(int j) {
  Integer two = 1;
  two <<= static_cast<unsigned>(j - 1);
  return Rational(binomial(2 * j, j) * j * two);
}

CouplingSeries TCouplingChart::w_coefficient(const CouplingSeries::Shape& shape, int n) const {
  // binom(2n, n) n g_{2n}
  const Rational b(binomial(2 * n, n) * n);
  CouplingSeries out(shape);
  if (n == 1) out = CouplingSeries::constant(shape, LaurentS(b));
  for (std::size_t i = 0; i < valences.size(); ++i) {
    if (valences[i] != 2 * n) continue;
    Integer scale = 1;
    scale <<= static_cast<unsigned>(n);
    out += CouplingSeries::coupling(shape, i) * LaurentS(b * Rational(scale));
  }
  return out;
}

Potential TCouplingChart::potential_at(const std::vector<Rational>& t) const {
  if (t.size() != valences.size()) throw DomainError("one t value per valence is required");
  Potential pot;
  pot.couplings[1] = Rational(1);
  for (std::size_t i = 0; i < valences.size(); ++i) {
    const int n = valences[i] / 2;
    Integer scale = 1;
    scale <<= static_cast<unsigned>(n);
    Rational g = t[i] * Rational(scale);
    if (n == 1) g += 1;
    if (g != 0) pot.couplings[n] = g;
    else pot.couplings.erase(n);
  }
  return pot;
}

CouplingSeries::Shape counting_shape(const TCouplingChart& chart, const std::vector<int>& caps, int total_cap) {
  if (caps.size() != chart.valences.size()) throw DomainError("one cap per valence is required");
  return {chart.valences, caps, total_cap};
}

CouplingSeries solve_r0_series(const TCouplingChart& chart, const CouplingSeries::Shape& shape) {
  const CouplingSeries half_s = CouplingSeries::constant(shape, LaurentS::monomial(1, Rational(1, 2)));
  CouplingSeries r0 = half_s;
  for (int pass = 0; pass < shape.total_cap; ++pass) {
    CouplingSeries next = half_s;
    std::vector<CouplingSeries> powers{CouplingSeries::constant(shape, LaurentS(Rational(1))), r0};
    for (std::size_t i = 0; i < chart.valences.size(); ++i) {
      const int j = chart.valences[i] / 2;
      while (static_cast<int>(powers.size()) <= j) powers.push_back(powers.back() * r0);
      std::vector<int> e(chart.valences.size(), 0);
      e[i] = 1;
      next += powers[j].times_monomial(e, 1, -TCouplingChart::hodograph_coefficient(j));
    }
    r0 = next;
  }
  return r0;
}

const FIntegrandSeries& generic_deformed_f(int kmax) {
  static std::mutex mutex;
  static std::map<int, FIntegrandSeries> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.lower_bound(kmax);
  if (it != cache.end()) return it->second;
  const RkExpansion rk = solve_rk(generic_context(kmax, true), kmax);
  return cache.emplace(kmax, assemble_f(rk, kmax)).first->second;
}

namespace {

struct Substitution {
  const CouplingSeries::Shape& shape;
  std::vector<CouplingSeries> xi_pow;     // r0^a
  std::vector<CouplingSeries> delta_pow;  // delta^b
  std::vector<CouplingSeries> w;          // W^(j)(r0), j = 0..; empty beyond degree

  const CouplingSeries& xi_power(int a) {
    while (static_cast<int>(xi_pow.size()) <= a) xi_pow.push_back(xi_pow.back() * xi_pow[1]);
    return xi_pow[a];
  }
  const CouplingSeries& delta_power(int b) {
    while (static_cast<int>(delta_pow.size()) <= b) delta_pow.push_back(delta_pow.back() * delta_pow[1]);
    return delta_pow[b];
  }
};

}  // namespace

CouplingSeries f_series(const FIntegrandSeries& f, int k, const TCouplingChart& chart, const CouplingSeries& r0s) {
  const auto& ctx = f.context;
  if (!ctx->deformed() || ctx->mode() != JetMode::generic) throw DomainError("f_series needs the generic deformed f_k");
  if (k < 0 || k >= static_cast<int>(f.f.size())) throw TruncationError("f_k beyond the assembled order");
  const auto& shape = r0s.shape();
  const CouplingSeries one = CouplingSeries::constant(shape, LaurentS(Rational(1)));
  const int p = chart.max_half_degree();

  // W(xi) coefficients and the derivatives W^(j)(r0) = sum_n a_n n!/(n-j)! r0^(n-j).
  std::vector<CouplingSeries> a;
  for (int n = 0; n <= p; ++n) a.push_back(n == 0 ? CouplingSeries(shape) : chart.w_coefficient(shape, n));
  Substitution sub{shape, {one, r0s}, {one}, {}};
  for (int j = 0; j <= p; ++j) {
    CouplingSeries wj(shape);
    for (int n = j; n <= p; ++n) {
      if (n == 0) continue;
      wj += sub.xi_power(n - j) * (a[n] * LaurentS(Rational(factorial(n) / factorial(n - j))));
    }
    sub.w.push_back(wj);
  }
  // D = 2(t - 1) + W'(r0) = 2/s - 2 + W'(r0).
  const CouplingSeries D = sub.w[1] + CouplingSeries::constant(shape, LaurentS::monomial(-1, Rational(2)) + LaurentS(Rational(-2)));
  sub.delta_pow.push_back(D.invert());

  const RingPtr& ring = ctx->ring();
  const std::size_t xi = ctx->xi_index(), delta = ctx->delta_index(), t = ctx->t_index();
  // Group terms by their (delta, t, W) part; the xi dependence is summed
  // with scalar coefficients before a single series product per group.
  std::map<std::vector<int>, std::vector<std::pair<int, Rational>>> groups;
  for (const auto& [m, c] : f.f[k].poly().terms()) {
    bool vanishes = false;
    std::vector<int> key(ring->size(), 0);
    for (std::size_t v = 0; v < ring->size(); ++v) {
      if (v == xi) continue;
      key[v] = m[v];
      if (v > t && m[v] != 0 && static_cast<int>(v - t) > p) vanishes = true;
    }
    if (m[xi] < 0 || m[delta] < 0) throw InternalInconsistency("f_k has a negative power of xi or delta");
    if (!vanishes) groups[key].emplace_back(m[xi], c);
  }
  CouplingSeries total(shape);
  for (const auto& [key, xi_terms] : groups) {
    CouplingSeries poly_xi(shape);
    for (const auto& [e, c] : xi_terms) poly_xi += sub.xi_power(e) * LaurentS(c);
    CouplingSeries term = poly_xi * sub.delta_power(key[delta]);
    if (key[t] != 0) term = term * LaurentS::monomial(-key[t], Rational(1));
    for (std::size_t v = t + 1; v < ring->size(); ++v) {
      for (int r = 0; r < key[v]; ++r) term = term * sub.w[v - t];
    }
    total += term;
  }
  return total;
}

std::map<std::vector<int>, Rational> integrate_t(const CouplingSeries& series) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& e : series.exponent_vectors()) {
    const LaurentS& c = series.at(e);
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    if (constant) {
      if (!c.is_zero()) throw InternalInconsistency("coupling-free part of f_k does not vanish");
      continue;
    }
    Rational sum = 0;
    for (const auto& [m, coeff] : c.terms()) {
      if (m <= 2) throw InternalInconsistency("divergent t-integral: t^(-" + std::to_string(m) + ")");
      sum += coeff * (ratio(1, m - 1) - ratio(1, m - 2));
    }
    if (sum != 0) out[e] = sum;
  }
  return out;
}

std::map<std::vector<int>, Integer> extract_kappa(const std::map<std::vector<int>, Rational>& taylor) {
  std::map<std::vector<int>, Integer> out;
  for (const auto& [n, coeff] : taylor) {
    Integer prod = 1;
    int total = 0;
    for (int x : n) {
      prod *= factorial(static_cast<unsigned>(x));
      total += x;
    }
    Rational kappa = -coeff * Rational(prod);
    if (total % 2 != 0) kappa = -kappa;
    if (kappa.get_den() != 1) throw InternalInconsistency("counting number is not an integer: " + to_string(kappa));
    if (kappa < 0) throw InternalInconsistency("counting number is negative: " + to_string(kappa));
    if (kappa != 0) out[n] = kappa.get_num();
  }
  return out;
}

Integer KappaTable::at(int k, const std::vector<int>& n) const {
  auto it = entries.find(k);
  if (it == entries.end()) return 0;
  auto jt = it->second.find(n);
  return jt == it->second.end() ? Integer(0) : jt->second;
}

std::vector<std::vector<int>> KappaTable::vectors() const {
  std::vector<std::vector<int>> out;
  std::vector<int> n(caps.size(), 0);
  while (true) {
    int total = 0;
    for (int x : n) total += x;
    if (total <= total_cap) out.push_back(n);
    std::size_t i = n.size();
    while (i > 0 && n[i - 1] == caps[i - 1]) n[--i] = 0;
    if (i == 0) break;
    ++n[i - 1];
  }
  return out;
}

KappaTable count_maps(const std::vector<int>& valences, const std::vector<int>& caps, int total_cap, int genus_max) {
  if (genus_max < 0 || genus_max > 5) throw DomainError("genus_max must be in 0..5");
  const TCouplingChart chart(valences);
  const auto shape = counting_shape(chart, caps, total_cap);
  const CouplingSeries r0 = solve_r0_series(chart, shape);
  const FIntegrandSeries& f = generic_deformed_f(genus_max);
  KappaTable table{valences, genus_max, caps, total_cap, {}};
  for (int k = 0; k <= genus_max; ++k) {
    table.entries[k] = extract_kappa(integrate_t(f_series(f, k, chart, r0)));
  }
  return table;
}

}  // namespace genuskit
