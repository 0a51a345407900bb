#include "genuskit/string/potential.hpp"

#include <cctype>

#include "genuskit/errors.hpp"

namespace genuskit {

int Potential::half_degree() const {
  if (couplings.empty()) return 0;
  return couplings.rbegin()->first;
}

bool Potential::is_numeric() const {
  for (const auto& [n, c] : couplings) {
    if (!std::holds_alternative<Rational>(c)) return false;
  }
  return true;
}

std::optional<Rational> Potential::numeric(int n) const {
  auto it = couplings.find(n);
  if (it == couplings.end()) return Rational(0);
  if (const auto* q = std::get_if<Rational>(&it->second)) return *q;
  return std::nullopt;
}

void Potential::validate() const {
  if (couplings.empty()) throw DomainError("potential has no couplings");
  for (const auto& [n, c] : couplings) {
    if (n < 1) throw DomainError("coupling degree must be a positive even number");
    if (const auto* s = std::get_if<std::string>(&c)) {
      if (s->empty()) throw DomainError("empty coupling symbol");
    }
  }
  const auto& top = couplings.rbegin()->second;
  if (const auto* q = std::get_if<Rational>(&top)) {
    if (*q <= 0) throw DomainError("the top coupling must be positive");
  }
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

}  // namespace

Potential Potential::from_strings(const std::map<std::string, std::string>& by_degree) {
  Potential pot;
  for (const auto& [key, value] : by_degree) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("coupling key is not an integer: '" + key + "'");
    }
    if (degree <= 0 || degree % 2 != 0) throw ParseError("coupling key must be a positive even degree: " + key);
    if (is_identifier(value)) {
      if (value == "xi" || value == "delta" || value == "t") throw ParseError("reserved symbol name: " + value);
      pot.couplings[degree / 2] = value;
    } else {
      Rational q = parse_rational(value);
      if (q != 0) pot.couplings[degree / 2] = q;
    }
  }
  pot.validate();
  return pot;
}

Potential Potential::gaussian() { return quartic(Rational(1), Rational(0)); }

Potential Potential::quartic(const Rational& g2, const Rational& g4) {
  Potential p;
  if (g2 != 0) p.couplings[1] = g2;
  if (g4 != 0) p.couplings[2] = g4;
  return p;
}

Potential Potential::sixtic(const Rational& g2, const Rational& g4, const Rational& g6) {
  Potential p = quartic(g2, g4);
  if (g6 != 0) p.couplings[3] = g6;
  return p;
}

Potential Potential::symbolic(int p) {
  Potential pot;
  for (int n = 1; n <= p; ++n) pot.couplings[n] = "g" + std::to_string(2 * n);
  return pot;
}

UPoly WFunction::as_upoly() const {
  if (!is_numeric()) throw DomainError("W has symbolic couplings");
  return UPoly::from_poly(poly, 0);
}

WFunction build_W(const Potential& pot) {
  std::vector<std::string> names{"xi"};
  for (const auto& [n, c] : pot.couplings) {
    if (const auto* s = std::get_if<std::string>(&c)) {
      bool seen = false;
      for (const auto& existing : names) seen = seen || existing == *s;
      if (!seen) names.push_back(*s);
    }
  }
  RingPtr ring = Ring::make(names);
  Poly w(ring);
  for (const auto& [n, c] : pot.couplings) {
    const Rational weight = Rational(binomial(2 * n, n)) * n;
    Poly coupling = std::holds_alternative<Rational>(c) ? Poly(ring, std::get<Rational>(c))
                                                         : Poly::variable(ring, std::get<std::string>(c));
    w += coupling * Poly::variable(ring, 0, n) * weight;
  }
  return {w};
}

Poly w_derived(const WFunction& w, int j) {
  if (j < 1) throw DomainError("w_derived needs j >= 1");
  Poly d = w.poly;
  for (int i = 0; i < j; ++i) d = d.partial(0);
  return d / (Rational(double_factorial_odd(static_cast<unsigned>(j))) * pow(Rational(2), j));
}

}  // namespace genuskit
