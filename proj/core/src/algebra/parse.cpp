#include "genuskit/algebra/parse.hpp"

#include <cctype>
#include <string>

#include "genuskit/errors.hpp"

namespace genuskit {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (eat('*')) {
        acc *= unary();
      } else if (eat('/')) {
        acc = divide(acc, unary());
      } else {
        return acc;
      }
    }
  }

  Poly divide(const Poly& a, const Poly& b) {
    if (!b.is_monomial()) fail("division by a non-monomial");
    const auto& [m, c] = b.leading_term();
    return a.mul_monomial(Monomial() / m, Rational(1 / c));
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    const bool neg = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (!neg) return base.pow(static_cast<unsigned>(e));
    return divide(Poly(ring_, Rational(1)), base.pow(static_cast<unsigned>(e)));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return Poly(ring_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) {
        ++pos_;
      }
      const std::string_view name = s_.substr(start, pos_ - start);
      const auto idx = ring_->find(name);
      if (!idx) fail("unknown symbol '" + std::string(name) + "'");
      return Poly::variable(ring_, *idx);
    }
    fail("unexpected character");
  }

  const RingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) { return Parser(ring, text).run(); }

}  // namespace genuskit
