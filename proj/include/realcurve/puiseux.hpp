#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "realcurve/curve.hpp"
#include "realcurve/function.hpp"
#include "realcurve/points.hpp"
#include "realcurve/quadnum.hpp"

namespace realcurve {

/// Truncated power series in t; entry k is the coefficient of t^k.
using Series = std::vector<QuadNum>;

enum class Realness { Real, ComplexConjugatePair };

/// Truncation policy for series computations: start with `n` exponent
/// steps per unit of ramification and double up to `n_max`.
struct Truncation {
  int n = 8;
  int n_max = 64;
};

/// Default policy; REALCURVE_NMAX overrides n_max.
Truncation default_truncation();

struct BranchGenerator;

/// A place of the complexified normalization centered at a point of X,
/// given by a parametrization
///
///   x(t) = a + gamma t^e + lambda Y(t),  y(t) = b + Y(t)
///
/// where lambda is the curve's shear, so that u = x - lambda y equals
/// u(center) + gamma t^e. The coefficients of Y live in Q or one quadratic
/// field. A ComplexConjugatePair branch stands for itself and its conjugate.
class Branch {
 public:
  explicit Branch(std::shared_ptr<const BranchGenerator> gen);

  std::size_t component() const;
  const QuadNum& center_x() const;
  const QuadNum& center_y() const;
  int ram_index() const;
  Realness realness() const;
  bool is_real() const { return realness() == Realness::Real; }
  /// Number of complex places this branch stands for: 2 for a conjugate
  /// pair at a real center, otherwise 1.
  int multiplicity() const;
  const BiPoly& component_poly() const;
  const QuadNum& gamma() const;

  /// First `terms` coefficients of x(t) and y(t), all exact.
  Series x_series(int terms) const;
  Series y_series(int terms) const;

  /// Order and leading coefficient of y(t) - b; order -1 when y is
  /// constant along the branch.
  int y_order() const;
  QuadNum y_leading() const;

  /// Human-readable parametrization with `terms` coefficients.
  std::string describe(int terms) const;

 private:
  std::shared_ptr<const BranchGenerator> gen_;
};

/// All places centered at (a, b), over every component through the point
/// and in canonical order: real before conjugate pairs, then by the order
/// and leading coefficient of y. Throws UnsupportedExtension when an edge
/// polynomial needs a field beyond one quadratic extension.
std::vector<Branch> puiseux_branches(const Curve& curve, const QuadNum& a, const QuadNum& b);
/// Same at a point; throws UnsupportedCenter if its coordinates are not
/// available exactly.
std::vector<Branch> puiseux_branches(const Curve& curve, const Point& p);

/// ord_t of a polynomial or rational function along a branch. `infinite`
/// is set when the function vanishes identically on the branch's component.
struct BranchOrder {
  bool infinite = false;
  int value = 0;
};
BranchOrder branch_order(const Branch& br, const BiPoly& g, const Truncation& tr = default_truncation());
BranchOrder branch_valuation(const Branch& br, const RatFuncOnCurve& r,
                             const Truncation& tr = default_truncation());

/// Limit of r along a branch as t -> 0.
struct BranchLimit {
  bool infinite = false;
  QuadNum value;
};
BranchLimit branch_limit(const Branch& br, const RatFuncOnCurve& r,
                         const Truncation& tr = default_truncation());

/// Value of polynomial g along a branch, as a series with `terms`
/// coefficients.
Series compose_along(const Branch& br, const BiPoly& g, int terms);

std::string to_string(const Series& s, char var = 't');
std::string to_string(Realness r);

}  // namespace realcurve
