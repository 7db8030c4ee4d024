#include "realcurve/report.hpp"

#include <cmath>

namespace realcurve {

using nlohmann::json;

json to_json(Tri t) {
  switch (t) {
    case Tri::True:
      return true;
    case Tri::False:
      return false;
    case Tri::Unknown:
      return "unknown";
    default:
      return "not_applicable";
  }
}

json to_json(const Point& p) {
  json j;
  j["exact"] = p.supported();
  if (p.supported()) {
    j["x"] = to_string(*p.x);
    j["y"] = to_string(*p.y);
  } else {
    const auto [ax, ay] = p.approx();
    j["x_approx"] = ax;
    j["y_approx"] = ay;
    j["parameter_polynomial"] = to_string(p.family.m, 't');
    j["x_of_parameter"] = to_string(p.family.x, 't');
    j["y_of_parameter"] = to_string(p.family.y, 't');
    j["parameter_interval"] = {to_string(p.param.lo()), to_string(p.param.hi())};
  }
  j["text"] = to_string(p);
  return j;
}

json to_json(const MembershipVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.certificate.empty()) j["certificate"] = v.certificate;
  if (!v.bound_used.empty()) j["bound_used"] = v.bound_used;
  if (v.representation) {
    j["representation"] = {{"numerator", to_string(v.representation->first)},
                           {"denominator", to_string(v.representation->second)}};
  }
  return j;
}

namespace {

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json pair_data_json(const std::vector<std::pair<std::string, std::string>>& d) {
  json a = json::array();
  for (const auto& [x, y] : d) a.push_back({{"x", x}, {"y", y}});
  return a;
}

json branch_json(const Branch& b) {
  const int terms = 4 * b.ram_index() + 1;
  return {{"component", b.component()},
          {"ramification", b.ram_index()},
          {"realness", to_string(b.realness())},
          {"x", to_string(b.x_series(terms))},
          {"y", to_string(b.y_series(terms))}};
}

}  // namespace

json to_json(const CurveReport& r) {
  json j;
  j["curve"] = r.curve;
  j["components"] = r.components;
  j["shear"] = to_string(r.shear);
  j["singular_points"] = {{"real", points_json(r.singular.real_points)},
                          {"nonreal_pairs", r.singular.nonreal_pair_count},
                          {"nonreal_pair_polynomials", pair_data_json(r.singular.nonreal_pair_data)}};
  json pts = json::array();
  for (const auto& pa : r.points) {
    json p;
    p["point"] = to_json(pa.point);
    p["half_branches"] = pa.half_branches ? json(*pa.half_branches) : json(nullptr);
    if (pa.branches_known) {
      p["branches"] = json::array();
      for (const auto& b : pa.branches) p["branches"].push_back(branch_json(b));
    } else {
      p["branches"] = nullptr;
    }
    p["isolated"] = to_json(pa.isolated);
    p["all_branches_real"] = to_json(pa.all_branches_real);
    if (!pa.note.empty()) p["note"] = pa.note;
    pts.push_back(std::move(p));
  }
  j["local_analysis"] = std::move(pts);
  j["isolated_real_points"] = points_json(r.isolated_real_points);
  j["is_central"] = to_json(r.is_central);
  j["is_normal"] = to_json(r.is_normal);
  j["o_integrally_closed"] = to_json(r.o_integrally_closed);
  j["totally_real_normalization"] = to_json(r.totally_real_normalization);
  j["biregular"] = {{"xb_equals_x", to_json(r.biregular.xb_equals_x)},
                    {"xb_equals_xprime", to_json(r.biregular.xb_equals_xprime)},
                    {"untouched_real_singular", points_json(r.biregular.untouched_real_singular)},
                    {"normalized_nonreal_pairs",
                     {{"count", r.biregular.normalized_nonreal_pairs},
                      {"minimal_polynomials", pair_data_json(r.biregular.nonreal_pair_data)}}}};
  j["component_real_locus"] = r.component_real;
  j["theory_applicable"] = r.theory_applicable;
  if (!r.per_component.empty()) {
    j["per_component"] = json::array();
    for (const auto& c : r.per_component) j["per_component"].push_back(to_json(c));
  }
  j["warnings"] = r.warnings;
  return j;
}

FunctionRun run_function(const Curve& curve, const FunctionSpec& spec, std::size_t index,
                         const FunctionOptions& opt) {
  const std::string field = "functions[" + std::to_string(index) + "]";
  const RatFuncOnCurve r = build_function(curve, spec.text, field);
  FunctionRun run;
  run.name = spec.name;
  run.report = analyze_function(curve, r, opt);
  if (!spec.relation.empty()) {
    std::vector<RatFuncOnCurve> coeffs;
    for (std::size_t i = 0; i < spec.relation.size(); ++i)
      coeffs.push_back(build_function(curve, spec.relation[i], field + ".relation[" + std::to_string(i) + "]"));
    const int d = static_cast<int>(coeffs.size());
    run.relation = d == 1 ? "T" : "T^" + std::to_string(d);
    for (int i = d - 1; i >= 0; --i) {
      if (coeffs[i].numerator().is_zero()) continue;
      run.relation += " + (" + to_string(coeffs[i]) + ")";
      if (i > 0) run.relation += i == 1 ? "*T" : "*T^" + std::to_string(i);
    }
    run.dependence = verify_integral_dependence(curve, r, coeffs, opt);
  }
  if (spec.equals) run.equals = equal_in_function_field(r, build_function(curve, *spec.equals, field + ".equals"));
  return run;
}

json to_json(const FunctionRun& r) {
  const FunctionReport& f = r.report;
  json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["function"] = f.function;
  j["characteristic_polynomial"] = to_string(f.charpoly);
  j["integral"] = to_json(f.integral);
  j["regular"] = to_json(f.regular);
  j["in_O_Xprime"] = to_json(f.in_o_xprime);
  j["in_O_X_closure"] = to_json(f.in_o_x_closure);
  j["sr_cent"] = to_json(f.sr_cent);
  j["in_pol_xb"] = to_json(f.in_pol_xb);
  json lim = json::object();
  for (const auto& e : f.limits) lim[to_string(e.point)] = e.values;
  j["limits"] = std::move(lim);
  if (r.dependence) j["integral_dependence"] = {{"relation", r.relation}, {"verified", to_json(*r.dependence)}};
  if (r.equals) j["equals_given_presentation"] = *r.equals;
  j["warnings"] = f.warnings;
  return j;
}

CurveReport analyze_manifest_curve(const Manifest& m, const Curve& curve) {
  CurveReport r = analyze_curve(curve);
  for (std::size_t i = 0; i < m.assume_irreducible.size(); ++i)
    if (!m.assume_irreducible[i])
      r.warnings.push_back("component " + std::to_string(i) +
                           " is not asserted irreducible; its places are still reported together");
  return r;
}

}  // namespace realcurve
