#pragma once

#include <memory>
#include <vector>

#include "genuskit/algebra/poly.hpp"
#include "genuskit/algebra/ratfunc.hpp"

namespace genuskit {

enum class JetMode { generic, concrete };

// Differential ring in which the T-derivatives of r0 = xi live.
//
// Elements are polynomials in xi, delta = 1/D, t and either the symbols
// W1..WM (generic: Wj stands for the j-th xi-derivative of W at xi) or the
// couplings of a concrete W. D = W'(xi) undeformed, D = 2(t-1) + W'(xi)
// deformed. Since dD/dT = W''(xi) delta, the derivation closes on
// polynomials in delta:
//   d xi = delta,  d delta = -W'' delta^3,  d Wj = W(j+1) delta,  d t = 0.
class JetContext {
 public:
  static std::shared_ptr<const JetContext> generic(bool deformed, int max_w_order);
  // `w` is a polynomial over a ring containing the symbol "xi"; its other
  // symbols become constant couplings.
  static std::shared_ptr<const JetContext> concrete(bool deformed, const Poly& w);

  JetMode mode() const { return mode_; }
  bool deformed() const { return deformed_; }
  const RingPtr& ring() const { return ring_; }
  std::size_t xi_index() const { return 0; }
  std::size_t delta_index() const { return 1; }
  std::size_t t_index() const { return 2; }
  int max_w_order() const { return max_w_order_; }

  Poly xi() const;
  Poly delta() const;
  Poly t() const;
  // j-th xi-derivative of W at xi; j = 0 only in concrete mode.
  Poly w_derivative(int j) const;
  // W^(j) / (2^j (2j-1)!!).
  Poly w_normalized(int j) const;
  Poly D() const;

  Poly derive(const Poly& p) const;
  // Replaces delta by 1/D.
  RatFunc to_ratfunc(const Poly& p) const;

 private:
  JetContext() = default;

  JetMode mode_ = JetMode::generic;
  bool deformed_ = false;
  RingPtr ring_;
  int max_w_order_ = 0;
  std::vector<Poly> w_derivs_;  // concrete: W, W', W'', ... until zero
};

using JetContextPtr = std::shared_ptr<const JetContext>;

class JetExpr {
 public:
  JetExpr() = default;
  JetExpr(JetContextPtr ctx, Poly value);

  const JetContextPtr& context() const { return ctx_; }
  const Poly& poly() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  JetExpr derive_T(int order = 1) const;
  RatFunc to_ratfunc() const { return ctx_->to_ratfunc(value_); }

  JetExpr operator-() const { return {ctx_, -value_}; }
  JetExpr operator+(const JetExpr& o) const { return {ctx_, value_ + o.value_}; }
  JetExpr operator-(const JetExpr& o) const { return {ctx_, value_ - o.value_}; }
  JetExpr operator*(const JetExpr& o) const { return {ctx_, value_ * o.value_}; }
  JetExpr operator*(const Rational& c) const { return {ctx_, value_ * c}; }
  friend bool operator==(const JetExpr& a, const JetExpr& b) { return a.value_ == b.value_; }

 private:
  JetContextPtr ctx_;
  Poly value_;
};

// Truncated series sum_k a_k eps^(2k), k <= kmax.
class EpsilonSeries {
 public:
  EpsilonSeries(JetContextPtr ctx, int kmax);
  EpsilonSeries(std::vector<JetExpr> coeffs, int kmax);

  int kmax() const { return kmax_; }
  bool truncated() const { return truncated_; }
  const JetExpr& operator[](int k) const { return c_.at(k); }
  const std::vector<JetExpr>& coefficients() const { return c_; }

  EpsilonSeries operator+(const EpsilonSeries& o) const;
  EpsilonSeries operator*(const EpsilonSeries& o) const;
  // a(T + j eps) + a(T - j eps) by Taylor expansion in T; odd powers of eps
  // cancel so the result is again a series in eps^2.
  EpsilonSeries symmetric_shift(int j) const;

 private:
  JetContextPtr ctx_;
  std::vector<JetExpr> c_;
  int kmax_;
  bool truncated_ = false;
};

}  // namespace genuskit
