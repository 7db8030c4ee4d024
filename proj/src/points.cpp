#include "realcurve/points.hpp"

#include <algorithm>
#include <cstdio>

#include "realcurve/error.hpp"
#include "realcurve/resultant.hpp"

namespace realcurve {

namespace {

// Polynomial in `var` vanishing at coord(t) for every root t of piece.
std::string coordinate_poly(const UniPoly& piece, const UniPoly& coord, char var) {
  const BiPoly a = BiPoly::from_y(piece);
  const BiPoly b = BiPoly::x() - BiPoly::from_y(coord % piece);
  const UniPoly r = resultant(a, b, Var::Y).coeff_y(0);
  return to_string(squarefree_part(r).primitive(), var);
}

Point make_point(const SolutionFamily& fam, const RealAlgebraic& param,
                 std::optional<QuadNum> exact_param) {
  Point p;
  p.family = fam;
  p.param = param;
  if (exact_param) {
    p.x = eval(fam.x, *exact_param);
    p.y = eval(fam.y, *exact_param);
  }
  return p;
}

}  // namespace

Point Point::rational(const Rational& x, const Rational& y) {
  Point p;
  p.family = {UniPoly({-x, Rational(1)}), UniPoly::constant(x), UniPoly::constant(y)};
  p.param = RealAlgebraic::rational(x);
  p.x = QuadNum(x);
  p.y = QuadNum(y);
  return p;
}

std::pair<Interval, Interval> Point::box(const Rational& width) const {
  RealAlgebraic a = param;
  for (;;) {
    const Interval bx = eval_interval(family.x, a.interval());
    const Interval by = eval_interval(family.y, a.interval());
    if (a.is_rational() || (bx.hi - bx.lo <= width && by.hi - by.lo <= width)) return {bx, by};
    a = a.bisected();
  }
}

std::pair<double, double> Point::approx() const {
  if (supported()) return {x->re(), y->re()};
  const auto [bx, by] = box(Rational(1, 1u << 30));
  return {Rational((bx.lo + bx.hi) / 2).get_d(), Rational((by.lo + by.hi) / 2).get_d()};
}

bool same_point(const Point& a, const Point& b) {
  if (!a.supported() || !b.supported()) return false;
  return *a.x == *b.x && *a.y == *b.y;
}

PointSet extract_points(const SolutionSet& sols) {
  PointSet out;
  for (const auto& fam : sols.families) {
    const LowDegreeFactors fac = factor_low_degree(fam.m);
    for (const auto& r : fac.roots) out.real.push_back(make_point(fam, RealAlgebraic::rational(r), QuadNum(r)));
    for (const auto& q : fac.quadratics) {
      const Rational b = q[1], c = q[0];
      const Rational disc = b * b - 4 * c;
      if (disc < 0) {
        ++out.nonreal_pairs;
        out.nonreal_data.emplace_back(coordinate_poly(q, fam.x, 'x'), coordinate_poly(q, fam.y, 'y'));
        continue;
      }
      const auto iso = isolate_real_roots(q);  // ascending: minus root first
      // sqrt(n/m) = sqrt(n m) / m
      const Integer nm = disc.get_num() * disc.get_den();
      const Rational half = Rational(1, 2) / Rational(disc.get_den());
      const QuadNum lo_root(-b / 2, -half, nm), hi_root(-b / 2, half, nm);
      SolutionFamily piece{q, fam.x % q, fam.y % q};
      out.real.push_back(make_point(piece, iso.at(0), lo_root));
      out.real.push_back(make_point(piece, iso.at(1), hi_root));
    }
    if (fac.residual.degree() >= 1) {
      const UniPoly& res = fac.residual;
      SolutionFamily piece{res, fam.x % res, fam.y % res};
      const auto iso = isolate_real_roots(res);
      for (const auto& a : iso) out.real.push_back(make_point(piece, a, std::nullopt));
      const int nonreal = res.degree() - static_cast<int>(iso.size());
      if (nonreal > 0) {
        out.nonreal_pairs += nonreal / 2;
        out.nonreal_data.emplace_back(coordinate_poly(res, fam.x, 'x'), coordinate_poly(res, fam.y, 'y'));
      }
    }
  }
  std::stable_sort(out.real.begin(), out.real.end(), [](const Point& l, const Point& r) {
    const auto a = l.approx(), b = r.approx();
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

SingularPoints singular_points(const Curve& curve) {
  const BiPoly& f = curve.f();
  const BiPoly fx = f.diff_x(), fy = f.diff_y();
  std::vector<BiPoly> candidates{fx, fy};
  for (int mu = 1; mu <= 8; ++mu) candidates.push_back(fx + fy * Rational(mu));
  std::optional<SolutionSet> sols;
  for (const auto& g : candidates) {
    if (g.is_zero()) continue;
    try {
      sols = solve_system(f, g);
      break;
    } catch (const PositiveDimensional&) {
    }
  }
  if (!sols) throw Error("singular_points: no zero-dimensional gradient combination");
  const SolutionSet sing = sols->zeros_of(fx).zeros_of(fy);
  PointSet ps = extract_points(sing);
  SingularPoints out;
  out.real_points = std::move(ps.real);
  out.nonreal_pair_count = ps.nonreal_pairs;
  out.nonreal_pair_data = std::move(ps.nonreal_data);
  for (const auto& p : out.real_points)
    if (!p.supported()) out.unsupported.push_back(p);
  return out;
}

std::vector<Point> real_zeros_on_curve(const Curve& curve, const BiPoly& g) {
  return extract_points(solve_system(curve.f(), g)).real;
}

QuadNum eval_at(const BiPoly& p, const QuadNum& x, const QuadNum& y) {
  QuadNum acc(0);
  const auto& ys = p.y_coeffs();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) acc = acc * y + eval(*it, x);
  return acc;
}

std::string to_string(const Point& p) {
  if (p.supported()) return "(" + to_string(*p.x) + ", " + to_string(*p.y) + ")";
  const auto [ax, ay] = p.approx();
  char buf[96];
  std::snprintf(buf, sizeof buf, "(~%.9g, ~%.9g)", ax, ay);
  return buf;
}

}  // namespace realcurve
