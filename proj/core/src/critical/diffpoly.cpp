#include "genuskit/critical/diffpoly.hpp"

#include <algorithm>
#include <sstream>

#include "genuskit/errors.hpp"

namespace genuskit {

std::string DiffRing::jet_name(const std::string& base, int order) {
  if (order <= 4) return base + std::string(static_cast<std::size_t>(order), '\'');
  return base + "^(" + std::to_string(order) + ")";
}

DiffRing::DiffRing(std::vector<std::string> constants, std::vector<std::string> functions, int max_order,
                   std::optional<std::string> independent)
    : functions_(std::move(functions)), max_order_(max_order) {
  if (functions_.empty()) throw DomainError("differential ring needs at least one function");
  if (max_order < 1) throw DomainError("differential ring needs jets of order >= 1");
  std::vector<std::string> names = std::move(constants);
  if (independent) {
    x_ = names.size();
    names.push_back(*independent);
  }
  first_jet_ = names.size();
  for (const auto& f : functions_) {
    for (int k = 0; k <= max_order; ++k) names.push_back(jet_name(f, k));
  }
  if (names.size() > kMaxVariables) throw DomainError("differential ring exceeds the variable limit");
  ring_ = Ring::make(std::move(names));
}

Poly DiffRing::jet(std::size_t f, int order) const {
  if (f >= functions_.size()) throw DomainError("no such function in the differential ring");
  if (order < 0 || order > max_order_) throw TruncationError("jet order beyond the differential ring");
  return Poly::variable(ring_, first_jet_ + f * static_cast<std::size_t>(max_order_ + 1) + static_cast<std::size_t>(order));
}

int DiffRing::order(const Poly& p, std::size_t f) const {
  const std::size_t base = first_jet_ + f * static_cast<std::size_t>(max_order_ + 1);
  for (int k = max_order_; k >= 0; --k) {
    if (p.depends_on(base + static_cast<std::size_t>(k))) return k;
  }
  return -1;
}

Poly DiffRing::dx(const Poly& p) const {
  Poly out(ring_);
  if (x_) out += p.partial(*x_);
  for (std::size_t f = 0; f < functions_.size(); ++f) {
    for (int k = 0; k <= max_order_; ++k) {
      const std::size_t v = first_jet_ + f * static_cast<std::size_t>(max_order_ + 1) + static_cast<std::size_t>(k);
      const Poly d = p.partial(v);
      if (d.is_zero()) continue;
      out += d * jet(f, k + 1);
    }
  }
  return out;
}

Poly DiffRing::integrate(const Poly& p) const {
  if (functions_.size() != 1 || x_) throw DomainError("integrate supports a single function without x");
  Poly rest = p;
  Poly q(ring_);
  // Peel the top jet: rest = A u^(n) + B forces Q to contain the u^(n-1)
  // antiderivative of A; what is left has lower order.
  while (!rest.is_zero()) {
    const int n = order(rest, 0);
    if (n < 1) throw DomainError("differential polynomial is not an exact x-derivative");
    const std::size_t top = first_jet_ + static_cast<std::size_t>(n);
    if (rest.degree(top) != 1) throw DomainError("differential polynomial is not an exact x-derivative");
    const Poly a = rest.coefficient(top, 1);
    const std::size_t below = top - 1;
    Poly q1(ring_);
    for (const auto& [e, c] : a.coefficients_in(below)) {
      q1 += c * Poly::variable(ring_, below, e + 1) / Rational(e + 1);
    }
    q += q1;
    rest -= dx(q1);
  }
  return q;
}

std::string DiffRing::format(const Poly& p) const {
  if (p.is_zero()) return "0";
  const std::size_t n = ring_->size();
  std::vector<const Poly::Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  // Highest jets first, then constants and x.
  std::sort(terms.begin(), terms.end(), [&](const Poly::Term* a, const Poly::Term* b) {
    for (std::size_t i = n; i-- > 0;) {
      if (a->first[i] != b->first[i]) return a->first[i] > b->first[i];
    }
    return false;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : terms) {
    const auto& [mono, c] = *t;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < n; ++i) {
      const int e = mono[i];
      if (e == 0) continue;
      const std::string& name = ring_->name(i);
      const bool primed = name.find('\'') != std::string::npos || name.find('^') != std::string::npos;
      if (e == 1) {
        factors.push_back(name);
      } else {
        factors.push_back((primed ? "(" + name + ")" : name) + "^" + std::to_string(e));
      }
    }
    if (mag != 1 || factors.empty()) {
      os << genuskit::to_string(mag);
      if (!factors.empty()) os << " ";
    }
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? " " : "") << factors[i];
  }
  return os.str();
}

}  // namespace genuskit
