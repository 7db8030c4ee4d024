#include "realcurve/classify.hpp"

#include "realcurve/error.hpp"
#include "realcurve/halfbranch.hpp"
#include "realcurve/resultant.hpp"
#include "realcurve/roots.hpp"

namespace realcurve {

namespace {

Tri any_isolated(const std::vector<PointAnalysis>& pts) {
  Tri central = Tri::True;
  for (const auto& pa : pts) {
    if (pa.isolated == Tri::True) return Tri::False;
    if (pa.isolated == Tri::Unknown) central = Tri::Unknown;
  }
  return central;
}

Tri all_real(const std::vector<PointAnalysis>& pts) {
  Tri out = Tri::True;
  for (const auto& pa : pts) out = tri_and(out, pa.all_branches_real);
  return out;
}

BiregularReport make_biregular(const SingularPoints& sp) {
  BiregularReport b;
  b.untouched_real_singular = sp.real_points;
  b.normalized_nonreal_pairs = sp.nonreal_pair_count;
  b.nonreal_pair_data = sp.nonreal_pair_data;
  b.xb_equals_x = tri(sp.nonreal_pair_count == 0);
  b.xb_equals_xprime = tri(sp.real_points.empty());
  return b;
}

std::vector<PointAnalysis> analyze_all(const Curve& curve, const SingularPoints& sp) {
  std::vector<PointAnalysis> out;
  for (const auto& p : sp.real_points) out.push_back(analyze_point(curve, p));
  return out;
}

// Rational sample points in every open interval cut out by the real roots of d.
std::vector<Rational> interval_samples(const UniPoly& d) {
  if (d.degree() < 1) return {Rational(0)};
  std::vector<RealAlgebraic> roots = isolate_real_roots(d);
  if (roots.empty()) return {Rational(0)};
  std::vector<Rational> out{roots.front().lo() - 1};
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (!(roots[i].hi() < roots[i + 1].lo())) {
      if (!roots[i].is_rational()) roots[i] = roots[i].bisected();
      if (!roots[i + 1].is_rational()) roots[i + 1] = roots[i + 1].bisected();
    }
    out.push_back(Rational((roots[i].hi() + roots[i + 1].lo()) / 2));
  }
  out.push_back(roots.back().hi() + 1);
  return out;
}

}  // namespace

PointAnalysis analyze_point(const Curve& curve, const Point& p) {
  PointAnalysis pa;
  pa.point = p;
  if (p.is_rational()) pa.half_branches = half_branch_count(curve, p.x->a(), p.y->a());
  if (p.supported()) {
    try {
      pa.branches = puiseux_branches(curve, p);
      pa.branches_known = true;
    } catch (const UnsupportedExtension& e) {
      pa.note = e.what();
    } catch (const PrecisionExhausted& e) {
      pa.note = e.what();
    }
  } else {
    pa.note = "coordinates outside Q and real quadratic fields";
  }
  int real_branches = 0;
  for (const auto& b : pa.branches) real_branches += b.is_real() ? 1 : 0;
  if (pa.half_branches) {
    pa.isolated = tri(*pa.half_branches == 0);
  } else if (pa.branches_known) {
    pa.isolated = tri(real_branches == 0);
  }
  if (pa.branches_known) pa.all_branches_real = tri(real_branches == static_cast<int>(pa.branches.size()));
  if (pa.half_branches && pa.branches_known && *pa.half_branches != 2 * real_branches)
    pa.note = "half-branch count " + std::to_string(*pa.half_branches) + " disagrees with " +
              std::to_string(real_branches) + " real places";
  return pa;
}

CentralLocus central_locus(const Curve& curve) {
  CentralLocus c;
  c.points = analyze_all(curve, singular_points(curve));
  for (const auto& pa : c.points)
    if (pa.isolated == Tri::True) c.isolated_real_points.push_back(pa.point);
  c.is_central = any_isolated(c.points);
  return c;
}

bool is_normal(const Curve& curve) {
  const SingularPoints sp = singular_points(curve);
  return sp.real_points.empty() && sp.nonreal_pair_count == 0;
}

bool is_O_integrally_closed(const Curve& curve) { return singular_points(curve).real_points.empty(); }

Tri has_totally_real_normalization(const Curve& curve) {
  return all_real(analyze_all(curve, singular_points(curve)));
}

BiregularReport biregular_report(const Curve& curve) { return make_biregular(singular_points(curve)); }

bool component_has_real_curve(const Curve& curve, std::size_t i) {
  const BiPoly& g = curve.sheared_component(i);
  // Over each interval between discriminant roots the number of real
  // fibre points is constant and every such point is smooth.
  const UniPoly disc = resultant(g, g.diff_y(), Var::Y).coeff_y(0);
  for (const auto& u : interval_samples(disc))
    if (sturm_count(g.at_x(u)) > 0) return true;
  return false;
}

bool CurveReport::has_unknown() const {
  for (Tri t : {is_central, is_normal, o_integrally_closed, totally_real_normalization, biregular.xb_equals_x,
                biregular.xb_equals_xprime})
    if (t == Tri::Unknown) return true;
  for (const auto& c : per_component)
    if (c.has_unknown()) return true;
  return false;
}

CurveReport analyze_curve(const Curve& curve) {
  CurveReport r;
  r.curve = to_string(curve.f());
  for (const auto& c : curve.components()) r.components.push_back(to_string(c));
  r.shear = curve.shear();
  r.warnings = curve.warnings();
  r.singular = singular_points(curve);
  r.points = analyze_all(curve, r.singular);
  for (const auto& pa : r.points) {
    if (pa.isolated == Tri::True) r.isolated_real_points.push_back(pa.point);
    if (!pa.note.empty()) r.warnings.push_back("point " + to_string(pa.point) + ": " + pa.note);
  }
  r.is_central = any_isolated(r.points);
  r.is_normal = tri(r.singular.real_points.empty() && r.singular.nonreal_pair_count == 0);
  r.o_integrally_closed = tri(r.singular.real_points.empty());
  r.totally_real_normalization = all_real(r.points);
  r.biregular = make_biregular(r.singular);

  for (std::size_t i = 0; i < curve.components().size(); ++i) {
    const bool real = component_has_real_curve(curve, i);
    r.component_real.push_back(real);
    if (!real) {
      r.theory_applicable = false;
      r.warnings.push_back("component " + std::to_string(i) + " (" + to_string(curve.components()[i]) +
                           ") has no real points of local dimension one");
    }
  }
  if (!r.theory_applicable) {
    r.warnings.push_back("not every component is real: integral-closure and normalization flags are not applicable");
    r.o_integrally_closed = Tri::NotApplicable;
    r.totally_real_normalization = Tri::NotApplicable;
    r.biregular.xb_equals_x = Tri::NotApplicable;
    r.biregular.xb_equals_xprime = Tri::NotApplicable;
  }

  if (curve.reducible()) {
    r.warnings.push_back("reducible curve: Cent X is taken to be the union of the central loci of the components");
    for (const auto& c : curve.components()) r.per_component.push_back(analyze_curve(Curve(c, {}, curve.shear())));
  }
  return r;
}

}  // namespace realcurve
