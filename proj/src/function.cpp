#include "realcurve/function.hpp"

#include "realcurve/error.hpp"

namespace realcurve {

RatFuncOnCurve::RatFuncOnCurve(const Curve& curve, const BiPoly& p, const BiPoly& q) : curve_(&curve) {
  if (q.is_zero()) throw NotInFunctionField("denominator is zero");
  for (std::size_t i = 0; i < curve.components().size(); ++i)
    if (curve.vanishes_on_component(i, q))
      throw NotInFunctionField("denominator " + to_string(q) + " vanishes on component " +
                               to_string(curve.components()[i]));
  const BiPoly g = p.is_zero() ? q : bi_gcd(p, q);
  p_ = bi_exact_div(p, g);
  q_ = bi_exact_div(q, g);
  const BiPoly qn = q_.primitive();
  // scale both by the same constant: qn = k * q_
  const auto [lead_exp, lead_coef] = *q_.monomials().rbegin();
  const Rational k = qn.coeff(lead_exp.first, lead_exp.second) / lead_coef;
  p_ *= k;
  q_ = qn;
}

RatFuncOnCurve RatFuncOnCurve::operator*(const RatFuncOnCurve& o) const {
  return RatFuncOnCurve(*curve_, p_ * o.p_, q_ * o.q_);
}

RatFuncOnCurve RatFuncOnCurve::operator+(const RatFuncOnCurve& o) const {
  return RatFuncOnCurve(*curve_, p_ * o.q_ + o.p_ * q_, q_ * o.q_);
}

RatFuncOnCurve RatFuncOnCurve::operator-(const RatFuncOnCurve& o) const {
  return RatFuncOnCurve(*curve_, p_ * o.q_ - o.p_ * q_, q_ * o.q_);
}

bool equal_in_function_field(const RatFuncOnCurve& a, const RatFuncOnCurve& b) {
  const BiPoly diff = a.numerator() * b.denominator() - b.numerator() * a.denominator();
  return a.curve().vanishes_on(diff);
}

std::string to_string(const RatFuncOnCurve& r) {
  if (r.denominator() == BiPoly::constant(1)) return to_string(r.numerator());
  return "(" + to_string(r.numerator()) + ") / (" + to_string(r.denominator()) + ")";
}

}  // namespace realcurve
