#include "realcurve/halfbranch.hpp"

#include <optional>

#include "realcurve/error.hpp"
#include "realcurve/points.hpp"
#include "realcurve/roots.hpp"
#include "realcurve/solve.hpp"

namespace realcurve {

namespace {

BiPoly dist2(const Rational& a, const Rational& b) {
  const BiPoly dx = BiPoly::x() - BiPoly::constant(a), dy = BiPoly::y() - BiPoly::constant(b);
  return dx * dx + dy * dy;
}

// Positive lower bound on the squared distance from (a, b) to a real point
// distinct from it.
Rational dist2_lower_bound(const Point& p, const Rational& a, const Rational& b) {
  Rational width(1, 16);
  for (;;) {
    const auto [bx, by] = p.box(width);
    const Interval dx = bx - Interval{a, a}, dy = by - Interval{b, b};
    const Interval sx = dx * dx, sy = dy * dy;
    const Rational lo = std::max(Rational(0), sx.lo) + std::max(Rational(0), sy.lo);
    if (lo > 0) return lo;
    width /= 16;
  }
}

// Bound on eps^2 contributed by one component: none if the component has no
// tangency points other than (a, b).
std::optional<Rational> component_bound(const BiPoly& c, const Rational& a, const Rational& b) {
  const BiPoly dx = BiPoly::x() - BiPoly::constant(a), dy = BiPoly::y() - BiPoly::constant(b);
  const BiPoly h = c.diff_x() * dy - c.diff_y() * dx;
  if (h.is_zero() || bi_divides(c, h)) {
    // The component consists of circles centered at (a, b); along the
    // horizontal line through the center its real zeros give the radii.
    const UniPoly along = c.affine(1, 0, a, 0, 0, b).at_y(0);
    std::optional<Rational> best;
    for (RealAlgebraic r : isolate_real_roots(along)) {
      if (r.is_rational() && r.lo() == 0) continue;
      // lower bound on |root|, refining until the interval avoids 0
      Rational lo = 0;
      while (lo == 0) {
        if (r.is_rational())
          lo = abs(r.lo());
        else if (r.hi() <= 0)
          lo = -r.hi();
        else if (r.lo() >= 0)
          lo = r.lo();
        if (lo == 0) r = r.bisected();
      }
      const Rational sq = lo * lo;
      if (!best || sq < *best) best = sq;
    }
    return best;
  }
  const SolutionSet tangency = solve_system(c, h).nonzeros_of(dist2(a, b));
  std::optional<Rational> best;
  for (const auto& p : extract_points(tangency).real) {
    const Rational lb = dist2_lower_bound(p, a, b);
    if (!best || lb < *best) best = lb;
  }
  return best;
}

}  // namespace

Rational admissible_radius(const Curve& curve, const Rational& a, const Rational& b) {
  Rational limit = 1;  // eps^2 must stay below this
  for (const auto& c : curve.components())
    if (auto lb = component_bound(c, a, b)) limit = std::min(limit, Rational(*lb / 4));
  Rational eps(1, 2);
  while (eps * eps >= limit) eps /= 2;
  return eps;
}

int half_branch_count_at_radius(const Curve& curve, const Rational& a, const Rational& b,
                                const Rational& eps) {
  const BiPoly circle = dist2(a, b) - BiPoly::constant(eps * eps);
  int total = 0;
  for (const auto& c : curve.components()) total += static_cast<int>(count_real_solutions(c, circle));
  return total;
}

int half_branch_count(const Curve& curve, const Rational& a, const Rational& b) {
  if (curve.f().eval(a, b) != 0) return 0;
  return half_branch_count_at_radius(curve, a, b, admissible_radius(curve, a, b));
}

}  // namespace realcurve
