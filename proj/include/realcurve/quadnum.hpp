#pragma once

#include <string>

#include "realcurve/unipoly.hpp"

namespace realcurve {

/// Element a + b*sqrt(d) of Q or of a quadratic field Q(sqrt(d)), with d
/// a non-square integer (negative d gives an imaginary field). Rational
/// values carry b = 0 and d = 0. Arithmetic between elements of two
/// different quadratic fields throws UnsupportedExtension: every value in
/// a computation lives in at most one quadratic extension of Q.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(const Rational& a) : a_(a) {}  // NOLINT(implicit)
  QuadNum(long a) : a_(a) {}              // NOLINT(implicit)
  QuadNum(const Rational& a, const Rational& b, const Integer& d);

  /// sqrt(q) for any rational q, as an element of Q(sqrt(q)).
  static QuadNum sqrt_of(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_real() const { return b_ == 0 || d_ > 0; }

  QuadNum conj() const;  // a - b sqrt(d)
  Rational norm() const;  // a^2 - d b^2
  /// Exact sign; real values only.
  int sign() const;
  double re() const;
  double im() const;

  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);
  friend QuadNum operator+(QuadNum l, const QuadNum& r) { return l += r; }
  friend QuadNum operator-(QuadNum l, const QuadNum& r) { return l -= r; }
  friend QuadNum operator*(QuadNum l, const QuadNum& r) { return l *= r; }
  friend QuadNum operator/(QuadNum l, const QuadNum& r) { return l /= r; }
  friend QuadNum operator-(const QuadNum& v) { return QuadNum(0) - v; }
  friend bool operator==(const QuadNum& l, const QuadNum& r);
  friend bool operator!=(const QuadNum& l, const QuadNum& r) { return !(l == r); }

  QuadNum pow(int k) const;

 private:
  void normalize();
  // Rewrite `o` over this element's field when the two fields agree.
  QuadNum aligned(const QuadNum& o) const;

  Rational a_ = 0, b_ = 0;
  Integer d_ = 0;
};

/// Exact comparison of two real values.
int compare(const QuadNum& l, const QuadNum& r);

/// True iff the two radicands define the same quadratic field.
bool same_field(const Integer& d1, const Integer& d2);

QuadNum eval(const UniPoly& p, const QuadNum& t);

/// "3/2", "1 + 2*sqrt(5)", "-sqrt(-1)".
std::string to_string(const QuadNum& v);

}  // namespace realcurve
