#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "realcurve/unipoly.hpp"

namespace realcurve {

/// Bivariate polynomial in x, y with rational coefficients, stored
/// recursively as a polynomial in y whose coefficients are polynomials in
/// x. The outer vector never ends in a zero polynomial.
class BiPoly {
 public:
  using Monomials = std::map<std::pair<int, int>, Rational>;  // (deg_x, deg_y)

  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coeffs);

  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly from_x(const UniPoly& p);  // p(x)
  static BiPoly from_y(const UniPoly& p);  // p(y)
  static BiPoly from_monomials(const Monomials& m);
  static BiPoly term(const Rational& c, int dx, int dy);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  int deg_y() const { return static_cast<int>(c_.size()) - 1; }
  int deg_x() const;
  int total_degree() const;
  const UniPoly& coeff_y(int j) const;
  Rational coeff(int dx, int dy) const;
  const std::vector<UniPoly>& y_coeffs() const { return c_; }
  Monomials monomials() const;
  /// Homogeneous part of top total degree, evaluated at (x, y) = (s, 1).
  Rational top_form_at(const Rational& s) const;

  Rational eval(const Rational& x0, const Rational& y0) const;
  UniPoly at_x(const Rational& x0) const;  // polynomial in y
  UniPoly at_y(const Rational& y0) const;  // polynomial in x

  BiPoly diff_x() const;
  BiPoly diff_y() const;
  BiPoly swap_xy() const;
  /// f(x + s*y, y)
  BiPoly shear(const Rational& s) const;
  /// f(a*x + b*y + c, d*x + e*y + g)
  BiPoly affine(const Rational& a, const Rational& b, const Rational& c,
                const Rational& d, const Rational& e, const Rational& g) const;
  /// Substitute polynomials for x and y.
  BiPoly compose(const BiPoly& px, const BiPoly& py) const;
  BiPoly pow(unsigned k) const;
  /// Scale to coprime integer coefficients with positive leading monomial.
  BiPoly primitive() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<UniPoly> c_;
};

/// Division in Q[x][y] by a divisor whose y-leading coefficient is a
/// nonzero constant. Returns (quotient, remainder) with deg_y(rem) < deg_y(b).
std::pair<BiPoly, BiPoly> divmod_y(const BiPoly& a, const BiPoly& b);
/// True iff d divides a in Q[x, y].
bool bi_divides(const BiPoly& d, const BiPoly& a);
/// Exact quotient a / d in Q[x, y]; throws Error if not divisible.
BiPoly bi_exact_div(const BiPoly& a, const BiPoly& d);
/// gcd in Q[x, y], normalized by `primitive()`; gcd(0, 0) = 0.
BiPoly bi_gcd(const BiPoly& a, const BiPoly& b);

/// Canonical text in the expression grammar, e.g. "y^2 - x^3 + x^2":
/// descending total degree, then descending x-degree.
std::string to_string(const BiPoly& p, char xvar = 'x', char yvar = 'y');

}  // namespace realcurve
