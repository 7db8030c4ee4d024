#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "realcurve/curve.hpp"
#include "realcurve/function.hpp"

namespace realcurve {

/// A rational function given as expression text.
struct FunctionText {
  std::string numerator;
  std::string denominator = "1";
};

struct FunctionSpec {
  std::string name;
  FunctionText text;
  /// Coefficients c_0, ..., c_{d-1} of a monic relation to verify.
  std::vector<FunctionText> relation;
  /// Another presentation that must define the same element of K(X).
  std::optional<FunctionText> equals;
  nlohmann::json expected;  // null when absent
};

struct PlotWindow {
  double xmin = -2, xmax = 2, ymin = -2, ymax = 2;
  int resolution = 400;
};

/// Curve manifest:
///
///   { "f": "...", "components": [...], "assume_irreducible": [...],
///     "functions": [{"name", "numerator", "denominator", "relation",
///                    "equals", "expected"}],
///     "options": {"degree_bound", "truncation",
///                 "plot": {"xmin", "xmax", "ymin", "ymax", "resolution"}},
///     "expected": {...}, "name": "...", "notes": "..." }
struct Manifest {
  std::string name;
  std::string notes;
  std::string f;
  std::vector<std::string> components;
  std::vector<bool> assume_irreducible;
  std::vector<FunctionSpec> functions;
  std::optional<int> degree_bound;
  std::optional<int> truncation;
  std::optional<PlotWindow> plot;
  nlohmann::json expected;
};

/// Throws ManifestError; JSON syntax errors report line and column.
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

/// Build the curve; expression errors become ManifestError naming the
/// field and the 1-based column.
Curve build_curve(const Manifest& m);
RatFuncOnCurve build_function(const Curve& curve, const FunctionText& t, const std::string& field);

}  // namespace realcurve
