#pragma once

#include <string>

#include "realcurve/bipoly.hpp"
#include "realcurve/curve.hpp"

namespace realcurve {

/// An element p/q of the total ring of fractions K(X). The pair is reduced
/// by its polynomial gcd and q is primitive; q is never divisible by a
/// component of the curve. The curve is referenced, not owned.
class RatFuncOnCurve {
 public:
  /// Throws NotInFunctionField if some component divides q.
  RatFuncOnCurve(const Curve& curve, const BiPoly& p, const BiPoly& q);

  const Curve& curve() const { return *curve_; }
  const BiPoly& numerator() const { return p_; }
  const BiPoly& denominator() const { return q_; }

  RatFuncOnCurve operator*(const RatFuncOnCurve& o) const;
  RatFuncOnCurve operator+(const RatFuncOnCurve& o) const;
  RatFuncOnCurve operator-(const RatFuncOnCurve& o) const;

 private:
  const Curve* curve_;
  BiPoly p_, q_;
};

/// Equality in K(X): p1 q2 - p2 q1 vanishes on every component.
bool equal_in_function_field(const RatFuncOnCurve& a, const RatFuncOnCurve& b);

/// "p / q", or just "p" when q = 1.
std::string to_string(const RatFuncOnCurve& r);

}  // namespace realcurve
