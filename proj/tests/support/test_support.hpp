#pragma once

#include <string>
#include <vector>

#include "genuskit/algebra/parse.hpp"
#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/ratfunc.hpp"
#include "genuskit/string/u_table.hpp"

namespace genuskit::testing {

// Jets of order >= 4 print as "r0^(4)", which the parser reads as a power.
// Parse over a twin ring whose jets are all written with apostrophes, then
// map back by index.
inline std::string primed(const std::string& name) {
  const auto pos = name.find("^(");
  if (pos == std::string::npos) return name;
  const int m = std::stoi(name.substr(pos + 2));
  return name.substr(0, pos) + std::string(static_cast<std::size_t>(m), '\'');
}

inline Poly parse_jets(const RingPtr& ring, const std::string& text) {
  std::vector<std::string> names;
  for (const auto& n : ring->names()) names.push_back(primed(n));
  const RingPtr twin = Ring::make(names);
  const Poly p = parse_poly(twin, text);
  std::vector<Poly> images;
  for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Poly::variable(ring, i));
  return p.compose(ring, images);
}

// a == b as fractions, without relying on a shared normal form.
inline bool same_fraction(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace genuskit::testing
