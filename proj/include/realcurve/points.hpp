#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realcurve/curve.hpp"
#include "realcurve/quadnum.hpp"
#include "realcurve/roots.hpp"
#include "realcurve/solve.hpp"

namespace realcurve {

/// A real point given by a real root `param` of `family.m` and the
/// coordinate polynomials of the family. When both coordinates lie in Q
/// or in one real quadratic field they are also available exactly.
struct Point {
  SolutionFamily family;
  RealAlgebraic param = RealAlgebraic::rational(0);
  std::optional<QuadNum> x, y;

  bool supported() const { return x.has_value() && y.has_value(); }
  bool is_rational() const { return supported() && x->is_rational() && y->is_rational(); }
  /// Certified boxes of width below `width` around each coordinate.
  std::pair<Interval, Interval> box(const Rational& width) const;
  std::pair<double, double> approx() const;

  static Point rational(const Rational& x, const Rational& y);
};

/// Exact equality for supported points; false otherwise.
bool same_point(const Point& a, const Point& b);

/// Real points of a solution set, ascending by (x, y), plus the number of
/// conjugate pairs of non-real points and a description of those pairs.
struct PointSet {
  std::vector<Point> real;
  int nonreal_pairs = 0;
  /// For each group of non-real points: polynomials satisfied by their
  /// x and y coordinates, e.g. {"x^2 + 1", "y"}.
  std::vector<std::pair<std::string, std::string>> nonreal_data;
};
PointSet extract_points(const SolutionSet& sols);

struct SingularPoints {
  std::vector<Point> real_points;
  int nonreal_pair_count = 0;
  std::vector<std::pair<std::string, std::string>> nonreal_pair_data;
  /// Real points whose coordinates lie outside Q and real quadratic
  /// fields (listed in real_points too).
  std::vector<Point> unsupported;
};

/// Real and non-real singular points of the complexification of the
/// curve, i.e. the common zeros of f, f_x, f_y. For reducible curves these
/// include every intersection point of distinct components.
SingularPoints singular_points(const Curve& curve);

/// Real points of X where `g` vanishes (g must not vanish on a component).
std::vector<Point> real_zeros_on_curve(const Curve& curve, const BiPoly& g);

/// Evaluate a polynomial at a supported point.
QuadNum eval_at(const BiPoly& p, const QuadNum& x, const QuadNum& y);

std::string to_string(const Point& p);

}  // namespace realcurve
