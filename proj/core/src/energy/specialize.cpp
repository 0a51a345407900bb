#include "genuskit/energy/specialize.hpp"

#include "genuskit/algebra/parse.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

std::string ModelSpec::name() const {
  switch (family) {
    case ModelFamily::quartic:
      return "quartic";
    case ModelFamily::two_valence:
      return "two_valence(" + std::to_string(nu) + ")";
    case ModelFamily::sixtic:
      return "sixtic";
  }
  return "?";
}

WFunction model_W(const ModelSpec& spec) {
  std::map<std::string, std::string> by_degree{{"2", "g2"}};
  switch (spec.family) {
    case ModelFamily::quartic:
      by_degree["4"] = "g4";
      break;
    case ModelFamily::two_valence: {
      if (spec.nu < 2) throw DomainError("two-valence models need nu >= 2");
      const std::string d = std::to_string(2 * spec.nu);
      by_degree[d] = "g" + d;
      break;
    }
    case ModelFamily::sixtic:
      by_degree["4"] = "g4";
      by_degree["6"] = "g6";
      break;
  }
  return build_W(Potential::from_strings(by_degree));
}

namespace {

ClosedFormF f0_form(const RingPtr& ring, const Poly& poly) {
  ClosedFormF f{0, RatFunc(poly), {}};
  f.logs.emplace_back(Rational(-1, 2), RatFunc(parse_poly(ring, "2*r0")));
  return f;
}

ClosedFormF f1_form(const RingPtr& ring, const std::string& arg) {
  ClosedFormF f{1, RatFunc(ring, Rational(0)), {}};
  f.logs.emplace_back(Rational(1, 12), RatFunc(parse_poly(ring, arg)));
  return f;
}

ClosedFormF two_valence(const RingPtr& ring, int nu_int, int k) {
  const Rational nu(nu_int);
  const Rational m = nu - 1;
  const Poly x = parse_poly(ring, "g2*r0");
  const Poly one(ring, Rational(1));
  switch (k) {
    case 0:
      return f0_form(ring, one * (-3 * m / (4 * nu)) + x * (m * (2 * nu + 1) / (nu * (nu + 1))) -
                               x * x * (m * m / (nu * (nu + 1))));
    case 1: {
      ClosedFormF f{1, RatFunc(ring, Rational(0)), {}};
      f.logs.emplace_back(Rational(1, 12), RatFunc(one * nu - x * (2 * m)));
      return f;
    }
    case 2: {
      const Poly bracket = one * (-nu * nu * nu * (8 * nu * nu + 5 * nu - 1)) +
                           x * (2 * nu * nu * m * (16 * nu * nu + 40 * nu - 1)) -
                           x.pow(2) * (4 * nu * m * m * (8 * nu * nu - nu + 44)) -
                           x.pow(3) * (96 * m * m * m * (4 * nu + 1)) + x.pow(4) * (192 * m * m * m * m);
      const Poly num = (x * Rational(2) - one) * m * bracket;
      const Poly den = (one * nu - x * (2 * m)).pow(5) * Rational(2880);
      return {2, RatFunc(num, den), {}};
    }
    default:
      throw DomainError("per-family closed forms exist for k = 0, 1, 2");
  }
}

ClosedFormF sixtic(const RingPtr& ring, int k) {
  switch (k) {
    case 0:
      return f0_form(ring, parse_poly(ring,
                                      "-1/2 + 7/6*g2*r0 - 1/3*(g2*r0)^2 + 8/5*g4*r0^2 - 6/5*(g4*r0^2)^2"
                                      " - 6/5*g2*g4*r0^3"));
    case 1:
      return f1_form(ring, "3 - 4*g2*r0 - 12*g4*r0^2");
    case 2: {
      const Poly s = parse_poly(ring, "12*g4*r0^2 + 4*g2*r0 - 3");
      auto block = [&](const char* num, const char* den_coeff, int power) {
        return RatFunc(parse_poly(ring, num), parse_poly(ring, den_coeff) * s.pow(power));
      };
      const RatFunc total =
          RatFunc(ring, Rational(-1, 240)) + block("593", "720", 2) +
          block("169*g2^2 + 2928*g4 - 1716*g4*g2*r0", "720*g4", 3) +
          block("224*g2^4 + 7587*g4*g2^2 + 45765*g4^2 - (57888*g4^2*g2 + 6756*g4*g2^3)*r0", "6480*g4^2", 4) +
          block("7*(6*g2^4 + 81*g4*g2^2 + 243*g4^2 - (8*g2^5 + 126*g4*g2^3 + 486*g4^2*g2)*r0)", "405*g4^2", 5);
      return {2, total, {}};
    }
    default:
      throw DomainError("per-family closed forms exist for k = 0, 1, 2");
  }
}

}  // namespace

ClosedFormF specialize_model(const ModelSpec& spec, int k) {
  const RingPtr ring = model_ring(model_W(spec));
  switch (spec.family) {
    case ModelFamily::quartic:
      switch (k) {
        case 0:
          return f0_form(ring, parse_poly(ring, "-3/8 + 5/6*g2*r0 - 1/6*(g2*r0)^2"));
        case 1:
          return f1_form(ring, "2*(1 - g2*r0)");
        case 2:
          return {2,
                  RatFunc(parse_poly(ring, "(1 - 2*g2*r0)^3*(41 + 21*g2*r0 - 6*(g2*r0)^2)"),
                          parse_poly(ring, "11520*(1 - g2*r0)^5")),
                  {}};
        default:
          throw DomainError("per-family closed forms exist for k = 0, 1, 2");
      }
    case ModelFamily::two_valence:
      return two_valence(ring, spec.nu, k);
    case ModelFamily::sixtic:
      return sixtic(ring, k);
  }
  throw InternalInconsistency("unknown model family");
}

}  // namespace genuskit
