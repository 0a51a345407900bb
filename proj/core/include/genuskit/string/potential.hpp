#pragma once

#include <map>
#include <string>
#include <variant>

#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/upoly.hpp"

namespace genuskit {

// Even potential V(lambda) = sum_n g_{2n} lambda^n with lambda = z^2. Each
// coupling is either an exact rational or a named symbol.
struct Potential {
  using Coupling = std::variant<Rational, std::string>;
  std::map<int, Coupling> couplings;  // keyed by n, 1 <= n <= p

  int half_degree() const;
  bool is_numeric() const;
  std::optional<Rational> numeric(int n) const;
  // Throws DomainError unless the top coupling is nonzero (and positive when
  // numeric) and every key is in range.
  void validate() const;

  // Keys are the even degrees 2n as strings, values rationals "p/q" or
  // identifiers, as in a potential file.
  static Potential from_strings(const std::map<std::string, std::string>& by_degree);
  static Potential gaussian();
  static Potential quartic(const Rational& g2, const Rational& g4);
  static Potential sixtic(const Rational& g2, const Rational& g4, const Rational& g6);
  // All couplings g2..g_{2p} symbolic, named "g2", "g4", ...
  static Potential symbolic(int p);
};

// W(xi) = sum_n binom(2n, n) n g_{2n} xi^n over the ring {xi, symbols...}.
struct WFunction {
  Poly poly;

  int degree() const { return poly.degree(0); }
  bool is_numeric() const { return poly.ring()->size() == 1; }
  // Numeric W only.
  UPoly as_upoly() const;
};

WFunction build_W(const Potential& pot);
// W^(j) / (2^j (2j-1)!!), j >= 1.
Poly w_derived(const WFunction& w, int j);

}  // namespace genuskit
