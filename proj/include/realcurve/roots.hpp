#pragma once

#include <optional>
#include <vector>

#include "realcurve/unipoly.hpp"

namespace realcurve {

/// Rational or +-infinity, used as an interval endpoint.
struct ExtRational {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  Rational value = 0;

  static ExtRational neg_inf() { return {Kind::NegInf, 0}; }
  static ExtRational pos_inf() { return {Kind::PosInf, 0}; }
  static ExtRational finite(const Rational& v) { return {Kind::Finite, v}; }
};

/// Number of distinct real roots of p in (lo, hi]. p must be nonzero.
int sturm_count(const UniPoly& p, const ExtRational& lo, const ExtRational& hi);
int sturm_count(const UniPoly& p);  // over the whole line

/// Closed rational interval.
struct Interval {
  Rational lo, hi;
};
Interval eval_interval(const UniPoly& p, const Interval& box);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Real algebraic number: the unique root of a squarefree primitive
/// polynomial in (lo, hi]. When lo == hi the number is that rational and
/// the endpoints are the root; otherwise neither endpoint is a root.
class RealAlgebraic {
 public:
  static RealAlgebraic rational(const Rational& q);
  /// Validates the isolation certificate; throws Error if it fails.
  RealAlgebraic(const UniPoly& poly, const Rational& lo, const Rational& hi);

  const UniPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return lo_ == hi_; }

  /// One bisection step; collapses to the exact value if the midpoint is
  /// the root.
  RealAlgebraic bisected() const;
  RealAlgebraic refined_to(const Rational& width) const;
  double approx() const;
  Interval interval() const { return {lo_, hi_}; }

 private:
  RealAlgebraic() = default;
  UniPoly poly_;
  Rational lo_, hi_;
};

/// One RealAlgebraic per distinct real root, ascending, disjoint intervals.
std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p);

/// Exact sign of p(alpha).
int alg_sign(const UniPoly& p, const RealAlgebraic& alpha);

/// Cauchy bound: every complex root has modulus < the returned value.
Rational cauchy_bound(const UniPoly& p);

/// Splitting of the squarefree part of p over Q into rational roots,
/// irreducible quadratics and a residual with no factor of degree <= 2
/// that the search could certify. Factors are found by numeric root
/// approximation and accepted only after exact division.
struct LowDegreeFactors {
  std::vector<Rational> roots;
  std::vector<UniPoly> quadratics;  // monic, irreducible over Q
  UniPoly residual;                 // monic; constant 1 when fully split
};
LowDegreeFactors factor_low_degree(const UniPoly& p);

/// Square root of a nonnegative rational if it is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace realcurve
