#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "realcurve/curve.hpp"
#include "realcurve/points.hpp"
#include "realcurve/puiseux.hpp"
#include "realcurve/verdict.hpp"

namespace realcurve {

/// Local data at one real singular point.
struct PointAnalysis {
  Point point;
  std::optional<int> half_branches;  // circle method; rational points only
  bool branches_known = false;
  std::vector<Branch> branches;
  std::string note;  // why something is undetermined
  Tri isolated = Tri::Unknown;
  Tri all_branches_real = Tri::Unknown;
};

/// Analyze a real point of X: circle count when the point is rational,
/// places when its coordinates are supported.
PointAnalysis analyze_point(const Curve& curve, const Point& p);

struct CentralLocus {
  std::vector<Point> isolated_real_points;
  Tri is_central = Tri::Unknown;
  std::vector<PointAnalysis> points;
};

/// Isolated real points of X (real singular points without real
/// half-branches). X minus these is Cent X.
CentralLocus central_locus(const Curve& curve);

/// Pol(X) integrally closed: X_C smooth.
bool is_normal(const Curve& curve);
/// O(X) integrally closed: no real singular point.
bool is_O_integrally_closed(const Curve& curve);
/// Every place over a real singular point is real.
Tri has_totally_real_normalization(const Curve& curve);

struct BiregularReport {
  std::vector<Point> untouched_real_singular;
  int normalized_nonreal_pairs = 0;
  std::vector<std::pair<std::string, std::string>> nonreal_pair_data;
  Tri xb_equals_x = Tri::Unknown;
  Tri xb_equals_xprime = Tri::Unknown;
};
BiregularReport biregular_report(const Curve& curve);

/// True iff component i has a one-dimensional real locus, i.e. a real
/// point where it is smooth.
bool component_has_real_curve(const Curve& curve, std::size_t i);

struct CurveReport {
  std::string curve;
  std::vector<std::string> components;
  Rational shear;
  SingularPoints singular;
  std::vector<PointAnalysis> points;
  std::vector<Point> isolated_real_points;
  Tri is_central = Tri::Unknown;
  Tri is_normal = Tri::Unknown;
  Tri o_integrally_closed = Tri::Unknown;
  Tri totally_real_normalization = Tri::Unknown;
  BiregularReport biregular;
  std::vector<bool> component_real;
  bool theory_applicable = true;
  std::vector<CurveReport> per_component;
  std::vector<std::string> warnings;

  /// Some verdict is Unknown.
  bool has_unknown() const;
};

CurveReport analyze_curve(const Curve& curve);

}  // namespace realcurve
