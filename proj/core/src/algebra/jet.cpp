#include "genuskit/algebra/jet.hpp"

#include <string>

#include "genuskit/errors.hpp"

namespace genuskit {

JetContextPtr JetContext::generic(bool deformed, int max_w_order) {
  if (max_w_order < 2) throw DomainError("generic jet context needs at least W''");
  if (3 + static_cast<std::size_t>(max_w_order) > kMaxVariables) throw DomainError("too many W symbols");
  std::vector<std::string> names{"xi", "delta", "t"};
  for (int j = 1; j <= max_w_order; ++j) names.push_back("W" + std::to_string(j));
  auto ctx = std::shared_ptr<JetContext>(new JetContext());
  ctx->mode_ = JetMode::generic;
  ctx->deformed_ = deformed;
  ctx->ring_ = Ring::make(std::move(names));
  ctx->max_w_order_ = max_w_order;
  return ctx;
}

JetContextPtr JetContext::concrete(bool deformed, const Poly& w) {
  const RingPtr& src = w.ring();
  if (!src->find("xi")) throw DomainError("W must be a polynomial in xi");
  std::vector<std::string> names{"xi", "delta", "t"};
  for (const auto& n : src->names()) {
    if (n == "delta" || n == "t") throw DomainError("coupling symbol clashes with a jet symbol: " + n);
    if (n != "xi") names.push_back(n);
  }
  auto ctx = std::shared_ptr<JetContext>(new JetContext());
  ctx->mode_ = JetMode::concrete;
  ctx->deformed_ = deformed;
  ctx->ring_ = Ring::make(std::move(names));
  Poly cur = w.embed(ctx->ring_);
  while (!cur.is_zero()) {
    ctx->w_derivs_.push_back(cur);
    cur = cur.partial(0);
  }
  if (ctx->w_derivs_.size() < 2) throw DomainError("W is constant in xi");
  ctx->max_w_order_ = static_cast<int>(ctx->w_derivs_.size()) - 1;
  return ctx;
}

Poly JetContext::xi() const { return Poly::variable(ring_, xi_index()); }
Poly JetContext::delta() const { return Poly::variable(ring_, delta_index()); }
Poly JetContext::t() const { return Poly::variable(ring_, t_index()); }

Poly JetContext::w_derivative(int j) const {
  if (j < 0) throw DomainError("negative derivative order");
  if (mode_ == JetMode::generic) {
    if (j == 0) throw DomainError("W itself is not a generic jet symbol");
    if (j > max_w_order_) throw TruncationError("W derivative beyond the generic context's order");
    return Poly::variable(ring_, 2 + static_cast<std::size_t>(j));
  }
  if (j >= static_cast<int>(w_derivs_.size())) return Poly(ring_);
  return w_derivs_[j];
}

Poly JetContext::w_normalized(int j) const {
  if (j < 1) throw DomainError("normalized W index must be at least 1");
  Rational norm = Rational(double_factorial_odd(static_cast<unsigned>(j))) * pow(Rational(2), j);
  return w_derivative(j) / norm;
}

Poly JetContext::D() const {
  Poly d = w_derivative(1);
  if (deformed_) d += (t() - Poly(ring_, Rational(1))) * Rational(2);
  return d;
}

Poly JetContext::derive(const Poly& p) const {
  const Poly dl = delta();
  Poly out = p.partial(xi_index()) * dl;
  const Poly pd = p.partial(delta_index());
  if (!pd.is_zero()) out -= pd * w_derivative(2) * dl.pow(3);
  if (mode_ == JetMode::generic) {
    for (int j = 1; j <= max_w_order_; ++j) {
      const Poly pw = p.partial(2 + static_cast<std::size_t>(j));
      if (pw.is_zero()) continue;
      if (j == max_w_order_) throw TruncationError("derivative needs W symbols beyond the generic context's order");
      out += pw * w_derivative(j + 1) * dl;
    }
  }
  return out;
}

RatFunc JetContext::to_ratfunc(const Poly& p) const {
  const int d = p.degree(delta_index());
  const Poly dd = D();
  Poly num(ring_);
  Poly dpow(ring_, Rational(1));
  const auto coeffs = p.coefficients_in(delta_index());
  // num = sum_b c_b D^(d-b), walking b downward so D powers grow.
  for (int b = d; b >= 0; --b) {
    auto it = coeffs.find(b);
    if (it != coeffs.end()) num += it->second * dpow;
    if (b > 0) dpow *= dd;
  }
  return RatFunc(num, dd.pow(static_cast<unsigned>(d)));
}

JetExpr::JetExpr(JetContextPtr ctx, Poly value) : ctx_(std::move(ctx)), value_(std::move(value)) {}

JetExpr JetExpr::derive_T(int order) const {
  if (order < 0) throw DomainError("negative derivative order");
  Poly v = value_;
  for (int i = 0; i < order; ++i) v = ctx_->derive(v);
  return {ctx_, v};
}

EpsilonSeries::EpsilonSeries(JetContextPtr ctx, int kmax) : ctx_(std::move(ctx)), kmax_(kmax) {
  if (kmax < 0) throw DomainError("negative truncation order");
  for (int k = 0; k <= kmax; ++k) c_.emplace_back(ctx_, Poly(ctx_->ring()));
}

EpsilonSeries::EpsilonSeries(std::vector<JetExpr> coeffs, int kmax) : c_(std::move(coeffs)), kmax_(kmax) {
  if (c_.empty()) throw DomainError("epsilon series needs at least one coefficient");
  ctx_ = c_.front().context();
  if (static_cast<int>(c_.size()) > kmax + 1) {
    for (std::size_t k = kmax + 1; k < c_.size(); ++k) truncated_ = truncated_ || !c_[k].is_zero();
    c_.resize(kmax + 1);
  }
  while (static_cast<int>(c_.size()) < kmax + 1) c_.emplace_back(ctx_, Poly(ctx_->ring()));
}

EpsilonSeries EpsilonSeries::operator+(const EpsilonSeries& o) const {
  if (kmax_ != o.kmax_) throw DomainError("epsilon series: mismatched truncation orders");
  EpsilonSeries r = *this;
  for (int k = 0; k <= kmax_; ++k) r.c_[k] = c_[k] + o.c_[k];
  r.truncated_ = truncated_ || o.truncated_;
  return r;
}

EpsilonSeries EpsilonSeries::operator*(const EpsilonSeries& o) const {
  if (kmax_ != o.kmax_) throw DomainError("epsilon series: mismatched truncation orders");
  EpsilonSeries r(ctx_, kmax_);
  r.truncated_ = truncated_ || o.truncated_;
  for (int a = 0; a <= kmax_; ++a) {
    if (c_[a].is_zero()) continue;
    for (int b = 0; b <= kmax_; ++b) {
      if (o.c_[b].is_zero()) continue;
      if (a + b > kmax_) {
        r.truncated_ = true;
        continue;
      }
      r.c_[a + b] = r.c_[a + b] + c_[a] * o.c_[b];
    }
  }
  return r;
}

EpsilonSeries EpsilonSeries::symmetric_shift(int j) const {
  EpsilonSeries r(ctx_, kmax_);
  r.truncated_ = true;  // the Taylor expansion itself is cut at eps^(2 kmax)
  const Rational jj(j);
  for (int i = 0; i <= kmax_; ++i) {
    Poly d = c_[i].poly();
    Rational scale = 2;  // 2 j^m / m!
    for (int m = 0; 2 * i + m <= 2 * kmax_; ++m) {
      if (m > 0) {
        d = ctx_->derive(d);
        scale = scale * jj / m;
      }
      if (m % 2 == 0) {
        const int n = i + m / 2;
        r.c_[n] = r.c_[n] + JetExpr(ctx_, d * scale);
      }
    }
  }
  return r;
}

}  // namespace genuskit
