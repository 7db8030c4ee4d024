#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "realcurve/error.hpp"
#include "realcurve/plot.hpp"
#include "realcurve/report.hpp"

using namespace realcurve;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kUnknown = 3;

struct GlobalOptions {
  int degree_bound = -1;
  int truncation = -1;
  int json_indent = 2;
};

FunctionOptions function_options(const Manifest& m, const GlobalOptions& g) {
  FunctionOptions opt;
  if (m.degree_bound) opt.degree_bound = *m.degree_bound;
  if (g.degree_bound >= 0) opt.degree_bound = g.degree_bound;
  if (m.truncation) opt.truncation.n_max = *m.truncation;
  if (g.truncation > 0) opt.truncation.n_max = g.truncation;
  opt.truncation.n = std::min(opt.truncation.n, opt.truncation.n_max);
  return opt;
}

void print(const nlohmann::json& j, int indent) { std::cout << j.dump(indent) << "\n"; }

int analyze(const std::string& path, const GlobalOptions& g) {
  const Manifest m = load_manifest(path);
  const Curve curve = build_curve(m);
  const CurveReport r = analyze_manifest_curve(m, curve);
  print(to_json(r), g.json_indent);
  return r.has_unknown() ? kUnknown : kOk;
}

int function(const std::string& path, int index, const GlobalOptions& g) {
  const Manifest m = load_manifest(path);
  if (index < 0 || index >= static_cast<int>(m.functions.size()))
    throw ManifestError("function index " + std::to_string(index) + " out of range (manifest has " +
                        std::to_string(m.functions.size()) + ")");
  const Curve curve = build_curve(m);
  const FunctionRun run = run_function(curve, m.functions[index], static_cast<std::size_t>(index),
                                       function_options(m, g));
  nlohmann::json j = to_json(run);
  j["curve"] = to_string(curve.f());
  print(j, g.json_indent);
  return run.has_unknown() ? kUnknown : kOk;
}

int plot(const std::string& path, const std::string& out) {
  const Manifest m = load_manifest(path);
  if (!m.plot) throw ManifestError("manifest has no options.plot window");
  const Curve curve = build_curve(m);
  const CurveReport r = analyze_curve(curve);
  std::vector<PlotMark> marks;
  for (const auto& p : r.singular.real_points) {
    const auto [x, y] = p.approx();
    marks.push_back({x, y, PlotMark::Kind::Singular});
  }
  for (const auto& p : r.isolated_real_points) {
    const auto [x, y] = p.approx();
    marks.push_back({x, y, PlotMark::Kind::Isolated});
  }
  std::ofstream os(out);
  if (!os) throw ManifestError("cannot write '" + out + "'");
  os << render_svg(curve.f(), *m.plot, marks);
  if (!os) throw ManifestError("cannot write '" + out + "'");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify real plane algebraic curves and rational functions on them"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--degree-bound", g.degree_bound, "Degree bound for the regularity search (default 2 deg f)");
  app.add_option("--truncation", g.truncation, "Ceiling for series truncation (N_max)");
  app.add_option("--json-indent", g.json_indent, "JSON indentation; -1 for a single line");

  std::string manifest, out;
  int index = 0;
  auto* a = app.add_subcommand("analyze", "Curve report as JSON");
  a->add_option("manifest", manifest, "Curve manifest")->required();
  auto* f = app.add_subcommand("function", "Report for one rational function of the manifest");
  f->add_option("manifest", manifest, "Curve manifest")->required();
  f->add_option("index", index, "0-based function index")->required();
  auto* p = app.add_subcommand("plot", "SVG rendering of the real locus");
  p->add_option("manifest", manifest, "Curve manifest")->required();
  p->add_option("output", out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  try {
    if (a->parsed()) return analyze(manifest, g);
    if (f->parsed()) return function(manifest, index, g);
    return plot(manifest, out);
  } catch (const ManifestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
