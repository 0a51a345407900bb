#include "genuskit/critical/phase.hpp"

#include "genuskit/errors.hpp"
#include "genuskit/string/hodograph.hpp"

namespace genuskit {

std::string to_string(Phase p) {
  switch (p) {
    case Phase::one_cut_regular:
      return "one_cut_regular";
    case Phase::two_cut:
      return "two_cut";
    case Phase::critical_boundary:
      return "critical_boundary";
    case Phase::undetermined:
      return "undetermined";
  }
  return "?";
}

std::string to_string(DeformationFate f) {
  switch (f) {
    case DeformationFate::stays_one_cut:
      return "stays_one_cut";
    case DeformationFate::crosses_at:
      return "crosses_at";
    case DeformationFate::singular_at_start:
      return "singular_at_start";
    case DeformationFate::undetermined:
      return "undetermined";
  }
  return "?";
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(n, d);
}

PhaseVerdict classify_quartic(const Rational& g2, const Rational& g4, unsigned digits) {
  if (g4 <= 0) throw DomainError("quartic classification needs g4 > 0");
  PhaseVerdict v;
  if (g2 >= 0) {
    v.phase = Phase::one_cut_regular;
    v.fate = DeformationFate::stays_one_cut;
    v.region = "G1(1)";
    return v;
  }
  // g2 < 0: compare g2 with -2 sqrt(g4) through g2^2 versus 4 g4.
  const Rational lhs = g2 * g2, rhs = 4 * g4;
  if (lhs < rhs) {
    v.phase = Phase::one_cut_regular;
    v.fate = DeformationFate::stays_one_cut;
    v.region = "G1(2)";
  } else if (lhs == rhs) {
    v.phase = Phase::critical_boundary;
    v.fate = DeformationFate::singular_at_start;
    v.region = "critical curve";
    v.details.push_back("g(t) lies in G1 for every t > 1");
  } else {
    v.phase = Phase::two_cut;
    v.fate = DeformationFate::crosses_at;
    v.region = "G2";
    const mpfr_prec_t bits = digits_to_bits(digits);
    if (auto s = exact_sqrt(g4)) {
      v.t0_exact = 1 - g2 - 2 * *s;
      v.t0 = Real(*v.t0_exact, bits);
    } else {
      v.t0 = Real(1 - g2, bits) - Real(2, bits) * sqrt(Real(g4, bits));
    }
  }
  return v;
}

PhaseVerdict sixtic_one_cut_check(const Rational& g2, const Rational& g4, const Rational& g6) {
  if (g2 <= 0 || g6 <= 0) throw DomainError("sixtic check needs g2 > 0 and g6 > 0");
  PhaseVerdict v;
  if (g4 >= 0) {
    // V is convex in z, and stays so along the deformation.
    v.phase = Phase::one_cut_regular;
    v.fate = DeformationFate::stays_one_cut;
    v.region = "convex";
    return v;
  }
  // The deformation multiplies 5 g2 g6 / (2 g4^2) by (t - 1 + g2)/g2 > 1.
  const Rational cone = 5 * g2 * g6 - 2 * g4 * g4;
  if (cone > 0) {
    v.phase = Phase::one_cut_regular;
    v.fate = DeformationFate::stays_one_cut;
    v.region = "inside cone";
  } else if (cone == 0) {
    if (4 * g4 * g4 * g4 == -225 * g6 * g6) {
      v.phase = Phase::critical_boundary;
      v.fate = DeformationFate::singular_at_start;
      v.region = "curve";
      v.details.push_back("h vanishes at the endpoints");
    } else {
      v.phase = Phase::one_cut_regular;
      v.fate = DeformationFate::stays_one_cut;
      v.region = "cone";
    }
  } else {
    v.region = "outside cone";
    v.details.push_back("5 g2 g6 < 2 g4^2: the completed-square criterion does not apply");
  }
  return v;
}

Potential deformed_potential(const Potential& pot, const Rational& T, const Rational& t) {
  if (!pot.is_numeric()) throw DomainError("deformation needs numeric couplings");
  if (T <= 0 || t <= 0) throw DomainError("T and t must be positive");
  Potential out;
  for (const auto& [n, c] : pot.couplings) {
    Rational g = *pot.numeric(n) / (T * pow(t, n));
    if (g != 0) out.couplings[n] = g;
  }
  Rational g2 = out.numeric(1).value_or(Rational(0)) + 1 - 1 / t;
  if (g2 != 0) out.couplings[1] = g2;
  else out.couplings.erase(1);
  return out;
}

UPoly h_polynomial(const Potential& pot, const Rational& T, const Rational& A) {
  // V_z / sqrt(z^2 - A) = sum_j 2 j g_{2j} lambda^(j-1) (1 - A/lambda)^(-1/2);
  // keep nonnegative powers of lambda.
  const int p = pot.half_degree();
  std::vector<Rational> h(static_cast<std::size_t>(p), Rational(0));
  for (int j = 1; j <= p; ++j) {
    const auto g = pot.numeric(j);
    if (!g || *g == 0) continue;
    Rational Am = 1;
    for (int m = 0; m <= j - 1; ++m) {
      const Rational w = Rational(binomial(2 * m, m)) / pow(Rational(4), m);
      h[j - 1 - m] += 2 * j * *g * w * Am / T;
      Am *= A;
    }
  }
  return UPoly(h);
}

namespace {

Rational to_rational(const Real& x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.get());
  Rational r(q);
  mpq_clear(q);
  return r;
}

}  // namespace

EndpointReport endpoint_solve_one_cut(const Potential& pot, const Rational& T, unsigned digits) {
  if (!pot.is_numeric()) throw DomainError("endpoint solve needs numeric couplings");
  const WFunction w = build_W(pot);
  const HodographRoot root = hodograph_root(w, T, digits);
  const Real& r0 = root.value();
  const mpfr_prec_t bits = digits_to_bits(digits);
  EndpointReport rep;
  rep.r0 = r0;
  rep.alpha = Real(2, bits) * sqrt(r0);
  rep.r0_exact = root.exact.front();
  const Rational A = rep.r0_exact ? 4 * *rep.r0_exact : 4 * to_rational(r0);
  rep.h = h_polynomial(pot, T, A);
  rep.h_at_endpoint = rep.h(Real(A, bits));
  rep.h_min_sampled = rep.h(Real(0, bits));
  const int samples = 64;
  for (int i = 1; i <= samples; ++i) {
    const Real v = rep.h(Real(A * ratio(i, samples), bits));
    if (v < rep.h_min_sampled) rep.h_min_sampled = v;
  }
  const Rational h0 = rep.h(Rational(0));
  const Rational hA = rep.h(A);
  // Roots in [0, A): the root at A itself is the singular case.
  const auto sturm = sturm_sequence(square_free_part(rep.h));
  int interior = rep.h.degree() <= 0 ? 0 : count_roots(sturm, Rational(0), A);
  if (hA == 0) --interior;
  if (h0 == 0) ++interior;
  if (interior > 0 || h0 < 0) throw DomainError("h changes sign on the support: the one-cut ansatz is invalid");
  const Real tiny = pow(Real(10, bits), -static_cast<long>(digits / 2));
  rep.singular = hA == 0 || (!rep.r0_exact && abs(rep.h_at_endpoint) < tiny);
  if (hA < 0 && !rep.singular) throw DomainError("h is negative at the endpoint: the one-cut ansatz is invalid");
  rep.h_positive = !rep.singular;
  rep.verdict = rep.singular ? "singular" : "regular";
  return rep;
}

}  // namespace genuskit
