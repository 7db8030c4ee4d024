#pragma once

#include "realcurve/curve.hpp"
#include "realcurve/unipoly.hpp"

namespace realcurve {

/// A radius eps = 2^-k such that every circle of radius at most eps around
/// (a, b) meets each local real half-branch of X at (a, b) exactly once and
/// meets X nowhere else. Radius choice: below the smallest distance from
/// (a, b) to a point where the gradient of a component is parallel to the
/// radius vector.
Rational admissible_radius(const Curve& curve, const Rational& a, const Rational& b);

/// Number of real points of X on the circle of radius eps around (a, b),
/// counted per component.
int half_branch_count_at_radius(const Curve& curve, const Rational& a, const Rational& b,
                                const Rational& eps);

/// Number of local real half-branches of X at (a, b); 0 if (a, b) is not
/// on X or is an isolated real point.
int half_branch_count(const Curve& curve, const Rational& a, const Rational& b);

}  // namespace realcurve
