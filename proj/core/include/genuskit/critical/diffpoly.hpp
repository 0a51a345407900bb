#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genuskit/algebra/poly.hpp"

namespace genuskit {

// Polynomials in the x-jets of functions u_f(x), over constant symbols and
// optionally the independent variable x itself. Jets are named u, u', u'',
// u''', u'''', u^(5), ...
class DiffRing {
 public:
  DiffRing(std::vector<std::string> constants, std::vector<std::string> functions, int max_order,
           std::optional<std::string> independent = std::nullopt);

  const RingPtr& ring() const { return ring_; }
  int max_order() const { return max_order_; }
  std::size_t function_count() const { return functions_.size(); }

  Poly jet(std::size_t f, int order) const;
  Poly symbol(const std::string& name) const { return Poly::variable(ring_, name); }
  std::optional<std::size_t> independent_index() const { return x_; }

  // Highest jet order of function f present in p, or -1.
  int order(const Poly& p, std::size_t f) const;
  Poly dx(const Poly& p) const;
  // Q with dx Q == p and no constant part; throws DomainError when p is not
  // an exact derivative. Single dependent function only.
  Poly integrate(const Poly& p) const;

  // Terms ordered by their highest jet first: "u'''' + 10 u u'' + 5 (u')^2".
  std::string format(const Poly& p) const;

  static std::string jet_name(const std::string& base, int order);

 private:
  RingPtr ring_;
  std::vector<std::string> functions_;
  int max_order_;
  std::size_t first_jet_ = 0;
  std::optional<std::size_t> x_;
};

}  // namespace genuskit
