#include "realcurve/parser.hpp"

#include <cctype>
#include <string>

#include "realcurve/error.hpp"

namespace realcurve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    BiPoly p = expr();
    skip();
    if (pos_ != s_.size()) {
      if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')
        throw ParseError("missing operator (implicit multiplication is not allowed)", pos_);
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  BiPoly base() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(rational());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        name += s_[pos_++];
      if (name == "x") return BiPoly::x();
      if (name == "y") return BiPoly::y();
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    return d;
  }

  Rational rational() {
    const std::size_t start = pos_;
    const std::string num = read_digits();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::string den = read_digits();
      if (den.empty()) throw ParseError("expected denominator digits", pos_);
      const Integer d(den);
      if (d == 0) throw ParseError("zero denominator", start);
      return make_rational(Integer(num), d);
    }
    return Rational(Integer(num));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view src) { return Parser(src).parse(); }

RatFuncOnCurve parse_ratfunc(std::string_view num, std::string_view den, const Curve& curve) {
  return RatFuncOnCurve(curve, parse_poly(num), parse_poly(den));
}

}  // namespace realcurve
