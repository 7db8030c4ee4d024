#pragma once

#include <string>
#include <vector>

#include "realcurve/curve.hpp"
#include "realcurve/function.hpp"
#include "realcurve/points.hpp"
#include "realcurve/puiseux.hpp"
#include "realcurve/verdict.hpp"

namespace realcurve {

/// Res_y(f, T q - p) in the sheared coordinates (u, y), u = x - s*y, as a
/// polynomial in T with coefficients in Q[u]. Dividing by the leading
/// coefficient gives the monic characteristic polynomial of p/q.
struct CharacteristicPoly {
  std::vector<UniPoly> coeffs;  // ascending in T
  Rational shear;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Coefficient j of the monic polynomial as num/den, den monic.
  std::pair<UniPoly, UniPoly> monic_coeff(int j) const;
  /// All monic coefficients are polynomials.
  bool integral() const;
  /// Monic coefficient j as a polynomial in x, y (requires integral()).
  BiPoly poly_coeff(int j) const;
};

CharacteristicPoly characteristic_poly(const Curve& curve, const RatFuncOnCurve& r);
/// Same polynomial restricted to component i.
CharacteristicPoly characteristic_poly(const Curve& curve, std::size_t component, const RatFuncOnCurve& r);

/// "T^2 - (x + 1)"; coefficients in x, y.
std::string to_string(const CharacteristicPoly& m);

struct FunctionOptions {
  int degree_bound = -1;  // -1: 2 * deg f
  Truncation truncation = default_truncation();
};

MembershipVerdict is_integral_over_pol(const Curve& curve, const RatFuncOnCurve& r);
MembershipVerdict regularity_on_x(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt = {});
MembershipVerdict is_in_o_xprime(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt = {});
MembershipVerdict is_in_o_x_closure(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt = {});
MembershipVerdict is_in_pol_xb(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt = {});

/// Limits of r along the real places at one point of Cent X where the
/// denominator of r vanishes; "infinity" for a pole.
struct LimitEntry {
  Point point;
  std::vector<std::string> values;  // distinct, in branch order
};

struct ContinuityResult {
  MembershipVerdict verdict;
  std::vector<LimitEntry> limits;
};
ContinuityResult extends_continuously_to_cent(const Curve& curve, const RatFuncOnCurve& r,
                                              const FunctionOptions& opt = {});

/// Checks r^d + c_{d-1} r^{d-1} + ... + c_0 = 0 in K(X) with every c_i
/// continuous on Cent X. `coeffs` lists c_0, ..., c_{d-1}.
Tri verify_integral_dependence(const Curve& curve, const RatFuncOnCurve& r,
                               const std::vector<RatFuncOnCurve>& coeffs, const FunctionOptions& opt = {});

struct FunctionReport {
  std::string function;
  CharacteristicPoly charpoly;
  MembershipVerdict integral, regular, in_o_xprime, in_o_x_closure, sr_cent, in_pol_xb;
  std::vector<LimitEntry> limits;
  std::vector<std::string> warnings;

  bool has_unknown() const;
};

FunctionReport analyze_function(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt = {});

}  // namespace realcurve
