#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "realcurve/classify.hpp"
#include "realcurve/manifest.hpp"
#include "realcurve/ratfunc.hpp"

namespace realcurve {

/// Function report plus the manifest-supplied checks.
struct FunctionRun {
  std::string name;
  FunctionReport report;
  std::string relation;  // empty when none was supplied
  std::optional<Tri> dependence;
  std::optional<bool> equals;

  bool has_unknown() const { return report.has_unknown() || dependence == Tri::Unknown; }
};

FunctionRun run_function(const Curve& curve, const FunctionSpec& spec, std::size_t index,
                         const FunctionOptions& opt);

/// true / false / "unknown" / "not_applicable"
nlohmann::json to_json(Tri t);
nlohmann::json to_json(const Point& p);
nlohmann::json to_json(const MembershipVerdict& v);
nlohmann::json to_json(const CurveReport& r);
nlohmann::json to_json(const FunctionRun& r);

/// Curve report with manifest-level warnings added.
CurveReport analyze_manifest_curve(const Manifest& m, const Curve& curve);

}  // namespace realcurve
