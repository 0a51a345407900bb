#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "genuskit/algebra/rational.hpp"

namespace genuskit {

// Laurent polynomial in s = 1/t with rational coefficients.
class LaurentS {
 public:
  LaurentS() = default;
  explicit LaurentS(const Rational& c);
  static LaurentS monomial(int exponent, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  // (exponent, coefficient) pairs in ascending exponent order, no zeros.
  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentS operator-() const;
  LaurentS operator+(const LaurentS& o) const;
  LaurentS operator-(const LaurentS& o) const;
  LaurentS operator*(const LaurentS& o) const;
  LaurentS operator*(const Rational& c) const;
  LaurentS& operator+=(const LaurentS& o);
  LaurentS shifted(int by) const;  // multiplies by s^by

  friend bool operator==(const LaurentS& a, const LaurentS& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::vector<std::pair<int, Rational>> terms_;
};

// Truncated power series in the couplings t_{2j} (one per valence) with
// LaurentS coefficients. Exponent vectors are bounded per variable and in
// total; anything beyond the caps is dropped and the drop is recorded.
class CouplingSeries {
 public:
  struct Shape {
    std::vector<int> valences;  // 2, 4, ..., one per coupling
    std::vector<int> caps;      // per-coupling exponent caps
    int total_cap = 0;

    std::size_t size() const;
    friend bool operator==(const Shape&, const Shape&) = default;
  };

  explicit CouplingSeries(Shape shape);
  static CouplingSeries constant(const Shape& shape, const LaurentS& c);
  // The coupling t_{valences[i]} itself.
  static CouplingSeries coupling(const Shape& shape, std::size_t i);

  const Shape& shape() const { return shape_; }
  bool truncated() const { return truncated_; }

  const LaurentS& at(const std::vector<int>& exponents) const;
  void set(const std::vector<int>& exponents, LaurentS value);
  bool in_range(const std::vector<int>& exponents) const;
  // All exponent vectors inside the caps, in storage order.
  std::vector<std::vector<int>> exponent_vectors() const;

  CouplingSeries operator-() const;
  CouplingSeries operator+(const CouplingSeries& o) const;
  CouplingSeries operator-(const CouplingSeries& o) const;
  CouplingSeries operator*(const CouplingSeries& o) const;
  CouplingSeries operator*(const LaurentS& c) const;
  CouplingSeries& operator+=(const CouplingSeries& o);
  // Multiplies by c * t^{exponents} * s^{s_shift} (a coupling monomial).
  CouplingSeries times_monomial(const std::vector<int>& exponents, int s_shift, const Rational& c) const;

  // Requires the coupling-free coefficient to be a single Laurent monomial.
  CouplingSeries invert() const;
  // p(a) for a polynomial p given by coefficients from degree 0 upward.
  CouplingSeries compose_scalar(const std::vector<Rational>& poly) const;

  friend bool operator==(const CouplingSeries& a, const CouplingSeries& b);

 private:
  std::size_t index(const std::vector<int>& exponents) const;
  std::vector<int> exponents_of(std::size_t index) const;
  void check_shape(const CouplingSeries& o) const;

  Shape shape_;
  std::vector<LaurentS> coeffs_;
  std::vector<int> total_degree_;  // per storage slot
  bool truncated_ = false;
};

}  // namespace genuskit
