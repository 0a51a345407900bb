#include "genuskit/energy/certificate.hpp"

#include <sstream>

#include "genuskit/algebra/parse.hpp"
#include "genuskit/energy/f_series.hpp"
#include "genuskit/errors.hpp"
#include "genuskit/string/rk.hpp"

namespace genuskit {

XiIntegrand generic_xi_integrand(int k) {
  const RkExpansion rk = solve_rk(generic_context(k, true), k);
  return to_xi_integrand(assemble_f(rk, k), k);
}

std::string Certificate::to_string() const {
  std::ostringstream os;
  os << "k=" << k << (holds ? " certified" : " FAILED");
  if (!residual.is_zero()) os << " residual terms=" << residual.size();
  if (!vanishes_at_zero) os << " (antiderivative does not vanish at xi = 0)";
  return os.str();
}

namespace {

// d/dxi ln(arg) for a Laurent monomial argument.
Poly log_derivative(const Poly& arg) {
  if (!arg.is_monomial()) throw DomainError("log argument is not a monomial after the change of variable");
  const auto& [m, c] = arg.leading_term();
  Poly out(arg.ring());
  for (std::size_t v = 0; v < arg.ring()->size(); ++v) {
    if (m[v] == 0) continue;
    Monomial inv;
    inv.set(v, -1);
    out += xi_derivative(Poly::variable(arg.ring(), v)).mul_monomial(inv, Rational(m[v]));
  }
  return out;
}

struct Antiderivative {
  Poly rational;
  std::vector<LogTerm> logs;

  Poly derivative() const {
    Poly d = xi_derivative(rational);
    for (const auto& lt : logs) d += log_derivative(lt.arg) * lt.coeff;
    return d;
  }
  // G(0) with sigma(0) = 1 and W(0) = 0.
  bool vanishes_at_zero() const {
    const RingPtr& ring = rational.ring();
    Poly at0(ring);
    for (const auto& [m, c] : rational.terms()) {
      if (m[0] < 0) return false;
      if (m[0] > 0 || m[2] > 0) continue;
      Monomial rest = m;
      rest.set(1, 0);
      at0 += Poly::monomial(ring, rest, c);
    }
    if (!at0.is_zero()) return false;
    for (const auto& lt : logs) {
      const auto& [m, c] = lt.arg.leading_term();
      for (std::size_t v = 0; v < ring->size(); ++v) {
        if (v != 1 && m[v] != 0) return false;
      }
      if (c != 1) return false;
    }
    return true;
  }
};

Certificate check(int k, const Antiderivative& G, const XiIntegrand& R) {
  Certificate cert;
  cert.k = k;
  cert.residual = G.derivative() - R.laurent;
  cert.vanishes_at_zero = G.vanishes_at_zero();
  cert.holds = cert.residual.is_zero() && cert.vanishes_at_zero;
  return cert;
}

}  // namespace

Certificate verify_total_derivative(const GenericClosedForm& form, const XiIntegrand& R) {
  const RingPtr& ring = R.laurent.ring();
  const RingPtr src = closed_form_ring();
  std::vector<Poly> images(src->size(), Poly(ring));
  images[0] = Poly::variable(ring, std::size_t{0});
  Monomial sigma_over_xi;
  sigma_over_xi.set(0, -1);
  sigma_over_xi.set(1, 1);
  images[1] = Poly::monomial(ring, sigma_over_xi, Rational(1));
  for (std::size_t j = 2; j < src->size(); ++j) {
    const auto idx = ring->find("W" + std::to_string(j));
    if (idx) images[j] = Poly::variable(ring, *idx);
    else if (form.rational.depends_on(j)) throw TruncationError("xi ring lacks W symbols for this closed form");
  }
  Antiderivative H{form.rational.compose(ring, images), {}};
  for (const auto& lt : form.logs) H.logs.push_back({lt.coeff, lt.arg.compose(ring, images)});
  const Poly W = Poly::variable(ring, std::size_t{2});
  const Poly one(ring, Rational(1));
  Monomial xi_over_sigma;
  xi_over_sigma.set(0, 1);
  xi_over_sigma.set(1, -1);
  Antiderivative G{H.rational - ((W - one) * H.derivative()).mul_monomial(xi_over_sigma, Rational(1)), H.logs};
  return check(form.k, G, R);
}

Certificate verify_total_derivative(int k) {
  return verify_total_derivative(generic_closed_form(k), generic_xi_integrand(k));
}

Certificate verify_printed_antiderivative(int k) {
  const XiIntegrand R = generic_xi_integrand(k);
  const RingPtr& ring = R.laurent.ring();
  if (k == 1) {
    Antiderivative G{parse_poly(ring, "-(W - 1)*xi^2*W2/(12*sigma^2)"), {{Rational(1, 12), parse_poly(ring, "sigma")}}};
    return check(1, G, R);
  }
  if (k == 2) {
    const Poly bracket = parse_poly(
        ring,
        "-xi^8/sigma^7*280*(W - 1)*W2^4"
        " + xi^6/sigma^6*(W - 1)*(300*W2^3 + 400*xi*W2^2*W3)"
        " - xi^5/sigma^5*(56*xi*W2^3 + (W - 1)*(260*W2*W3 + 58*xi*W3^2 + 88*xi*W2*W4))"
        " + xi^4/sigma^4*(-9*W2^2 + 58*xi*W2*W3 + (W - 1)*(36*W4 + 10*xi*W5))"
        " + xi^2/sigma^3*(-12*W2 + 4*xi*W3 - 10*xi^2*W4) - 12/sigma^2");
    // The printed bracket differs from a G with G(0) = 0 by the constant 12.
    Antiderivative G{(bracket + Poly(ring, Rational(12))) * Rational(-1, 2880), {}};
    return check(2, G, R);
  }
  throw DomainError("printed antiderivatives exist for k = 1, 2");
}

bool printed_integrand_matches(int k) {
  const XiIntegrand R = generic_xi_integrand(k);
  const RingPtr& ring = R.laurent.ring();
  // Normalized W_j = W^(j) / (2^j (2j-1)!!).
  const std::string N2 = "(W2/12)", N3 = "(W3/120)", N4 = "(W4/1680)", N5 = "(W5/30240)", N6 = "(W6/665280)";
  std::string text;
  if (k == 1) {
    text = "(W - 1)*(xi^2*24*" + N2 + "^2/sigma^3 - (10*xi*" + N3 + " + 3*" + N2 + ")/sigma^2)*xi";
  } else if (k == 2) {
    text = "3*(1 - W)*(xi^9/sigma^8*56448*" + N2 + "^5" +
           " - xi^7/sigma^7*(10368*" + N2 + "^4 + 84480*xi*" + N2 + "^3*" + N3 + ")" +
           " + xi^5/sigma^6*(420*" + N2 + "^3 + 10800*xi*" + N2 + "^2*" + N3 +
           " + xi^2*(21800*" + N2 + "*" + N3 + "^2 + 23520*" + N2 + "^2*" + N4 + "))" +
           " - xi^4/sigma^5*(260*" + N2 + "*" + N3 + " + xi*(1110*" + N3 + "^2 + 2380*" + N2 + "*" + N4 + ")" +
           " + xi^2*(4760*" + N3 + "*" + N4 + " + 5376*" + N2 + "*" + N5 + "))" +
           " + xi^3/sigma^4*(35*" + N4 + " + 336*xi*" + N5 + " + 770*xi^2*" + N6 + "))";
  } else {
    throw DomainError("printed integrands exist for k = 1, 2");
  }
  return parse_poly(ring, text) == R.laurent;
}

}  // namespace genuskit
