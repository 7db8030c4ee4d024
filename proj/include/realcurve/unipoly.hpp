#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace realcurve {

/// Arbitrary-precision rational. gmpxx keeps results canonical
/// (positive denominator, reduced); values built from raw parts must be
/// passed through `make_rational`.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);  // "p" or "p/q"

/// Dense univariate polynomial with rational coefficients. The
/// coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);  // ascending degree

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& operator[](int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& t) const;
  int sign_at(const Rational& t) const { return sgn(eval(t)); }
  UniPoly derivative() const;
  UniPoly monic() const;
  /// Multiply by the lcm of denominators and divide by the content so the
  /// result has coprime integer coefficients and positive leading term.
  UniPoly primitive() const;
  /// p(t + s)
  UniPoly shift(const Rational& s) const;
  /// p(s * t)
  UniPoly scale(const Rational& s) const;
  /// t^deg * p(1/t)
  UniPoly reverse() const;
  UniPoly compose(const UniPoly& inner) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; `b` must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Division whose remainder must vanish; throws Error otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);
/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);
/// Root multiplicity of `root` in p (p nonzero).
int multiplicity_at(const UniPoly& p, const Rational& root);

std::string to_string(const UniPoly& p, char var = 'x');

}  // namespace realcurve
