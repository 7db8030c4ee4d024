#include "fixture_check.hpp"

#include <set>

#include "realcurve/report.hpp"

using namespace realcurve;
using nlohmann::json;

namespace props {

namespace {

FunctionOptions options_of(const Manifest& m) {
  FunctionOptions opt;
  if (m.degree_bound) opt.degree_bound = *m.degree_bound;
  if (m.truncation) opt.truncation.n_max = *m.truncation;
  opt.truncation.n = std::min(opt.truncation.n, opt.truncation.n_max);
  return opt;
}

const json* lookup(const json& j, const std::string& dotted) {
  const json* cur = &j;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = dotted.find('.', start);
    const std::string key = dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
    if (dot == std::string::npos) return cur;
    start = dot + 1;
  }
}

// Point lists compare by their display text.
json normalize(const json& j) {
  if (j.is_array()) {
    json out = json::array();
    for (const auto& e : j) out.push_back(e.is_object() && e.contains("text") ? e["text"] : normalize(e));
    return out;
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "yes") return true;
    if (s == "no") return false;
  }
  return j;
}

const json* origin_entry(const json& report) {
  for (const auto& e : report["local_analysis"])
    if (e["point"]["text"] == "(0, 0)") return &e;
  return nullptr;
}

void check_curve(const Fixture& fx, const json& report, std::vector<std::string>& out) {
  const std::string name = fx.manifest.name;
  for (const auto& [key, want] : fx.manifest.expected.items()) {
    if (key == "branches_at_origin" || key == "half_branches_at_origin") {
      const json* o = origin_entry(report);
      if (!o) {
        out.push_back(name + ": no local analysis at the origin");
        continue;
      }
      if (key == "half_branches_at_origin") {
        if ((*o)["half_branches"] != want) out.push_back(name + ": half_branches_at_origin " + (*o)["half_branches"].dump());
        continue;
      }
      json got = json::array();
      for (const auto& b : (*o)["branches"]) got.push_back({{"realness", b["realness"]}, {"ramification", b["ramification"]}});
      if (got != want) out.push_back(name + ": branches_at_origin " + got.dump());
      continue;
    }
    const json* got = lookup(report, key);
    if (key == "singular_points") got = lookup(report, "singular_points.real");
    if (!got) {
      out.push_back(name + ": missing " + key);
      continue;
    }
    if (normalize(*got) != normalize(want)) out.push_back(name + ": " + key + " = " + got->dump() + ", expected " + want.dump());
  }
}

void check_function(const Fixture& fx, const FunctionSpec& spec, const json& report, std::vector<std::string>& out) {
  const std::string label = fx.manifest.name + " / " + spec.name;
  for (const auto& [key, want] : spec.expected.items()) {
    std::string what;
    if (key == "limits") {
      json got = report["limits"];
      for (auto& [pt, vals] : got.items()) {
        std::set<std::string> a(vals.begin(), vals.end());
        std::set<std::string> b;
        if (want.contains(pt)) b = std::set<std::string>(want[pt].begin(), want[pt].end());
        if (a != b) what = "limits at " + pt + " = " + vals.dump();
      }
      if (got.size() != want.size()) what = "limits " + got.dump();
    } else if (key == "characteristic_polynomial") {
      if (report[key] != want) what = key + " = " + report[key].dump();
    } else if (key == "integral_dependence") {
      if (!report.contains(key) || report[key]["verified"] != want) what = "integral_dependence";
    } else if (key == "equals") {
      if (report["equals_given_presentation"] != want) what = "equals_given_presentation";
    } else if (!report.contains(key)) {
      what = "missing " + key;
    } else if (report[key]["status"] != want) {
      what = key + " = " + report[key]["status"].dump();
    }
    if (!what.empty()) out.push_back(label + ": " + what + ", expected " + want.dump());
  }
}

}  // namespace

std::vector<std::string> check_fixture(const Fixture& fx) {
  std::vector<std::string> out;
  const Curve curve = build_curve(fx.manifest);
  const CurveReport cr = analyze_manifest_curve(fx.manifest, curve);
  check_curve(fx, to_json(cr), out);
  const FunctionOptions opt = options_of(fx.manifest);
  for (std::size_t i = 0; i < fx.manifest.functions.size(); ++i) {
    const auto& spec = fx.manifest.functions[i];
    check_function(fx, spec, to_json(run_function(curve, spec, i, opt)), out);
  }
  return out;
}

}  // namespace props
