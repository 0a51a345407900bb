#include "genuskit/string/hodograph.hpp"

#include "genuskit/algebra/upoly.hpp"
#include "genuskit/errors.hpp"

namespace genuskit {

const Real& HodographRoot::value() const {
  if (positive_roots.empty()) throw DomainError("W(r0) = T has no positive root");
  if (positive_roots.size() > 1) throw DomainError("W(r0) = T has several positive roots; not one-cut certified");
  return positive_roots.front();
}

HodographRoot hodograph_root(const WFunction& w, const Rational& T, unsigned digits) {
  const UPoly p = w.as_upoly() - UPoly(std::vector<Rational>{T});
  if (p.degree() < 1) throw DomainError("W is constant");
  const mpfr_prec_t bits = digits_to_bits(digits);
  HodographRoot out;
  const UPoly g = gcd(p, p.derivative());
  const auto g_seq = g.degree() >= 1 ? sturm_sequence(g) : std::vector<UPoly>{};
  for (const auto& iv : isolate_roots(p, Rational(0), root_bound(p))) {
    out.positive_roots.push_back(root_value(p, iv, bits));
    out.exact.push_back(iv.exact);
    if (g.degree() < 1) continue;
    if (iv.exact) {
      out.critical = out.critical || g(*iv.exact) == 0;
    } else {
      out.critical = out.critical || count_roots(g_seq, iv.lo, iv.hi) > 0;
    }
  }
  return out;
}

}  // namespace genuskit
