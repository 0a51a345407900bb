#include "genuskit/string/u_table.hpp"

#include "genuskit/errors.hpp"

namespace genuskit {

std::string UCoeffTable::jet_name(const std::string& base, int i, int m) {
  std::string s = base + std::to_string(i);
  if (m <= 3) return s + std::string(static_cast<std::size_t>(m), '\'');
  return s + "^(" + std::to_string(m) + ")";
}

std::size_t UCoeffTable::jet(int i, int m) const {
  const int lo = triple_ ? 1 : 0;
  if (i < lo || i - lo >= static_cast<int>(jets_.size())) throw TruncationError("jet index out of range");
  const auto& row = jets_[i - lo];
  if (m < 0 || m >= static_cast<int>(row.size())) throw TruncationError("jet derivative order out of range");
  return row[m];
}

int UCoeffTable::max_jet_order(int i) const {
  const int lo = triple_ ? 1 : 0;
  return static_cast<int>(jets_.at(i - lo).size()) - 1;
}

std::size_t UCoeffTable::rc() const {
  if (!triple_) throw DomainError("continuum table has no rc symbol");
  return rc_;
}

const Poly& UCoeffTable::entry(int k, int j) const {
  if (k < 1 || k > kmax_) throw TruncationError("U table entry beyond kmax");
  if (j < 1 || j > 3 * k) return zero_;
  return entries_[k][j];
}

int UCoeffTable::weight(const Monomial& mono) const {
  const int lo = triple_ ? 1 : 0;
  int w = 0;
  for (std::size_t r = 0; r < jets_.size(); ++r) {
    for (std::size_t m = 0; m < jets_[r].size(); ++m) {
      w += mono[jets_[r][m]] * (static_cast<int>(m) + 2 * (static_cast<int>(r) + lo));
    }
  }
  return w;
}

int UCoeffTable::jet_degree(const Monomial& mono) const {
  int d = 0;
  for (const auto& row : jets_) {
    for (std::size_t v : row) d += mono[v];
  }
  if (triple_) d += mono[rc_];
  return d;
}

// Writes U = U0 P with U0 = sqrt(lambda eta), eta = 1/(lambda - 4b), where b
// is the base point (r0, or the constant rc). Shifting T by eps acts on U0
// P as U0 exp(eps D) P with D Q = dQ + 2 (db) eta Q, and dividing the
// quadratic identity by lambda U0^2 gives
//   E = eta r (P + P_-)(P + P_+) - (1 + 4 b eta) P^2 + 1 = 0.
// At order eps^(2k) the unknown P_k enters only as -2 P_k.
class UTableSolver {
 public:
  UTableSolver(int kmax, bool triple) {
    t_.kmax_ = kmax;
    t_.triple_ = triple;
    std::vector<std::string> names;
    if (triple) names.push_back("rc");
    const int lo = triple ? 1 : 0;
    const int top = 2 * kmax + 1;
    for (int i = lo; i <= kmax; ++i) {
      std::vector<std::size_t> row;
      for (int m = 0; 2 * i + m <= top; ++m) {
        row.push_back(names.size());
        names.push_back(UCoeffTable::jet_name(triple ? "u" : "r", i, m));
      }
      t_.jets_.push_back(row);
    }
    t_.eta_ = names.size();
    names.push_back("eta");
    if (names.size() > kMaxVariables) throw DomainError("U table order too large for the jet ring");
    t_.ring_ = Ring::make(names);
    t_.zero_ = Poly(t_.ring_);
    one_ = Poly(t_.ring_, Rational(1));
    eta_ = Poly::variable(t_.ring_, t_.eta_);
    base_ = triple ? Poly::variable(t_.ring_, std::size_t{0}) : Poly::variable(t_.ring_, t_.jet(0, 0));
    dbase_ = triple ? Poly(t_.ring_) : Poly::variable(t_.ring_, t_.jet(0, 1));
    P_.push_back(one_);
    T_.push_back({one_});
  }

  UCoeffTable run() {
    const int kmax = t_.kmax_;
    for (int k = 1; k <= kmax; ++k) {
      P_.push_back(Poly(t_.ring_));
      T_.push_back({Poly(t_.ring_)});
      extend_shifts(2 * k);
      const Poly residual = quadratic_order(2 * k);
      P_[k] = residual / Rational(2);
      T_[k] = {P_[k]};
    }
    extend_shifts(2 * kmax + 1);
    for (int n = 0; n <= 2 * kmax + 1; ++n) {
      if (!quadratic_order(n).is_zero()) {
        throw InternalInconsistency("quadratic resolvent identity fails at order eps^" + std::to_string(n));
      }
      if (!linear_order(n).is_zero()) {
        throw InternalInconsistency("linear resolvent identity fails at order eps^" + std::to_string(n));
      }
    }
    t_.entries_.assign(kmax + 1, {});
    for (int k = 1; k <= kmax; ++k) {
      auto& row = t_.entries_[k];
      row.assign(3 * k + 1, Poly(t_.ring_));
      for (const auto& [e, c] : P_[k].coefficients_in(t_.eta_)) {
        if (e < 1 || e > 3 * k) throw InternalInconsistency("U_k has an eta power outside 1..3k");
        row[e] = c;
      }
      for (int j = 1; j <= 3 * k; ++j) {
        for (const auto& [mono, c] : row[j].terms()) {
          if (t_.weight(mono) != 2 * k || t_.jet_degree(mono) != j) {
            throw InternalInconsistency("U table entry is not graded as expected");
          }
        }
      }
    }
    return std::move(t_);
  }

 private:
  Poly derive(const Poly& p) const {
    Poly out(t_.ring_);
    for (const auto& row : t_.jets_) {
      for (std::size_t m = 0; m < row.size(); ++m) {
        const Poly d = p.partial(row[m]);
        if (d.is_zero()) continue;
        if (m + 1 >= row.size()) throw TruncationError("U table derivation exceeded the stored jets");
        out += d * Poly::variable(t_.ring_, row[m + 1]);
      }
    }
    const Poly de = p.partial(t_.eta_);
    if (!de.is_zero() && !dbase_.is_zero()) out += de * dbase_ * eta_ * eta_ * Rational(4);
    return out;
  }

  Poly covariant(const Poly& p) const {
    Poly out = derive(p);
    if (!dbase_.is_zero()) out += p * dbase_ * eta_ * Rational(2);
    return out;
  }

  // Makes T_[i][m] = D^m P_i / m! available for 2i + m <= n.
  void extend_shifts(int n) {
    for (std::size_t i = 0; i < P_.size(); ++i) {
      auto& row = T_[i];
      while (2 * static_cast<int>(i) + static_cast<int>(row.size()) <= n) {
        const int m = static_cast<int>(row.size());
        row.push_back(covariant(row.back()) / Rational(m));
      }
    }
  }

  Poly S(int n) const {
    Poly s(t_.ring_);
    for (int i = 0; 2 * i <= n && i < static_cast<int>(P_.size()); ++i) s += T_[i].at(n - 2 * i);
    return s;
  }
  Poly plain(int n) const {
    if (n % 2 != 0 || n / 2 >= static_cast<int>(P_.size())) return Poly(t_.ring_);
    return P_[n / 2];
  }
  Poly A(int a) const { return a % 2 == 0 ? plain(a) + S(a) : plain(a) - S(a); }
  Poly B(int b) const { return plain(b) + S(b); }
  Poly r_coeff(int c) const {
    if (c % 2 != 0) return Poly(t_.ring_);
    if (c == 0) return base_;
    return Poly::variable(t_.ring_, t_.jet(c / 2, 0));
  }
  Poly r_plus(int c) const {
    if (t_.triple_) {
      Poly out = c == 0 ? base_ : Poly(t_.ring_);
      for (int i = 1; 2 * i <= c; ++i) {
        out += Poly::variable(t_.ring_, t_.jet(i, c - 2 * i)) / Rational(factorial(c - 2 * i));
      }
      return out;
    }
    Poly out(t_.ring_);
    for (int i = 0; 2 * i <= c; ++i) {
      out += Poly::variable(t_.ring_, t_.jet(i, c - 2 * i)) / Rational(factorial(c - 2 * i));
    }
    return out;
  }

  Poly quadratic_order(int n) const {
    Poly lhs(t_.ring_);
    for (int c = 0; c <= n; c += 2) {
      Poly inner(t_.ring_);
      for (int a = 0; a <= n - c; ++a) inner += A(a) * B(n - c - a);
      lhs += r_coeff(c) * inner;
    }
    lhs *= eta_;
    Poly sq(t_.ring_);
    if (n % 2 == 0) {
      for (int i = 0; 2 * i <= n; ++i) sq += plain(2 * i) * plain(n - 2 * i);
    }
    Poly out = lhs - (one_ + base_ * eta_ * Rational(4)) * sq;
    if (n == 0) out += one_;
    return out;
  }

  Poly linear_order(int n) const {
    Poly first(t_.ring_);
    for (int c = 0; c <= n; ++c) first += r_plus(c) * shifted_pair(n - c);
    Poly second(t_.ring_);
    for (int c = 0; c <= n; c += 2) second += r_coeff(c) * A(n - c);
    const Poly third = (one_ + base_ * eta_ * Rational(4)) * (S(n) - plain(n));
    return (first - second) * eta_ - third;
  }

  // Coefficient of eps^a in P(T + 2 eps) + P(T + eps).
  Poly shifted_pair(int a) const {
    Poly out(t_.ring_);
    for (int i = 0; 2 * i <= a && i < static_cast<int>(P_.size()); ++i) {
      const int m = a - 2 * i;
      Integer two_m = 1;
      two_m <<= m;
      out += T_[i].at(m) * Rational(two_m + 1);
    }
    return out;
  }

  UCoeffTable t_;
  Poly one_;
  Poly eta_;
  Poly base_;
  Poly dbase_;
  std::vector<Poly> P_;
  std::vector<std::vector<Poly>> T_;
};

UCoeffTable derive_u_table(int kmax) {
  if (kmax < 1 || kmax > 5) throw DomainError("derive_u_table supports 1 <= kmax <= 5");
  return UTableSolver(kmax, false).run();
}

UCoeffTable derive_triple_scaling_table(int kmax) {
  if (kmax < 1 || kmax > 6) throw DomainError("derive_triple_scaling_table supports 1 <= kmax <= 6");
  return UTableSolver(kmax, true).run();
}

}  // namespace genuskit
