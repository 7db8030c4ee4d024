#include "realcurve/manifest.hpp"

#include <fstream>
#include <sstream>

#include "realcurve/error.hpp"
#include "realcurve/parser.hpp"

namespace realcurve {

namespace {

using nlohmann::json;

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string get_string(const json& j, const char* key, const std::string& where, bool required,
                       const std::string& fallback = "") {
  if (!j.contains(key)) {
    if (required) throw ManifestError(where + ": missing field '" + key + "'");
    return fallback;
  }
  if (!j[key].is_string()) throw ManifestError(where + ": field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

FunctionText function_text(const json& j, const std::string& where) {
  if (j.is_string()) return {j.get<std::string>(), "1"};
  if (!j.is_object()) throw ManifestError(where + ": expected a string or an object");
  return {get_string(j, "numerator", where, true), get_string(j, "denominator", where, false, "1")};
}

std::optional<int> get_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) return std::nullopt;
  if (!j[key].is_number_integer()) throw ManifestError(where + ": field '" + key + "' must be an integer");
  return j[key].get<int>();
}

double get_double(const json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw ManifestError(where + ": field '" + key + "' must be a number");
  return j[key].get<double>();
}

BiPoly parse_field(const std::string& src, const std::string& field) {
  try {
    return parse_poly(src);
  } catch (const ParseError& e) {
    throw ManifestError(field + ", column " + std::to_string(e.position() + 1) + ": " + e.reason());
  }
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ManifestError("invalid JSON at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
  Manifest m;
  m.f = get_string(j, "f", "manifest", true);
  m.name = get_string(j, "name", "manifest", false);
  m.notes = get_string(j, "notes", "manifest", false);
  if (j.contains("components")) {
    if (!j["components"].is_array()) throw ManifestError("manifest: 'components' must be an array");
    for (const auto& c : j["components"]) {
      if (!c.is_string()) throw ManifestError("manifest: components must be strings");
      m.components.push_back(c.get<std::string>());
    }
  }
  if (j.contains("assume_irreducible")) {
    const auto& a = j["assume_irreducible"];
    if (a.is_boolean()) {
      m.assume_irreducible.assign(std::max<std::size_t>(m.components.size(), 1), a.get<bool>());
    } else if (a.is_array()) {
      for (const auto& b : a) {
        if (!b.is_boolean()) throw ManifestError("manifest: 'assume_irreducible' entries must be booleans");
        m.assume_irreducible.push_back(b.get<bool>());
      }
    } else {
      throw ManifestError("manifest: 'assume_irreducible' must be a boolean or an array");
    }
  }
  if (j.contains("functions")) {
    if (!j["functions"].is_array()) throw ManifestError("manifest: 'functions' must be an array");
    std::size_t i = 0;
    for (const auto& fj : j["functions"]) {
      const std::string where = "functions[" + std::to_string(i++) + "]";
      if (!fj.is_object()) throw ManifestError(where + ": expected an object");
      FunctionSpec fs;
      fs.name = get_string(fj, "name", where, false);
      fs.text = function_text(fj, where);
      if (fj.contains("relation")) {
        if (!fj["relation"].is_array() || fj["relation"].empty())
          throw ManifestError(where + ": 'relation' must be a non-empty array");
        for (const auto& c : fj["relation"]) fs.relation.push_back(function_text(c, where + ".relation"));
      }
      if (fj.contains("equals")) fs.equals = function_text(fj["equals"], where + ".equals");
      if (fj.contains("expected")) fs.expected = fj["expected"];
      m.functions.push_back(std::move(fs));
    }
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw ManifestError("manifest: 'options' must be an object");
    m.degree_bound = get_int(o, "degree_bound", "options");
    m.truncation = get_int(o, "truncation", "options");
    if (o.contains("plot")) {
      const auto& p = o["plot"];
      if (!p.is_object()) throw ManifestError("options: 'plot' must be an object");
      PlotWindow w;
      w.xmin = get_double(p, "xmin", w.xmin, "options.plot");
      w.xmax = get_double(p, "xmax", w.xmax, "options.plot");
      w.ymin = get_double(p, "ymin", w.ymin, "options.plot");
      w.ymax = get_double(p, "ymax", w.ymax, "options.plot");
      w.resolution = get_int(p, "resolution", "options.plot").value_or(w.resolution);
      if (!(w.xmin < w.xmax) || !(w.ymin < w.ymax) || w.resolution < 2)
        throw ManifestError("options.plot: empty window or resolution below 2");
      m.plot = w;
    }
  }
  if (j.contains("expected")) m.expected = j["expected"];
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

Curve build_curve(const Manifest& m) {
  const BiPoly f = parse_field(m.f, "field 'f'");
  std::vector<BiPoly> comps;
  for (std::size_t i = 0; i < m.components.size(); ++i)
    comps.push_back(parse_field(m.components[i], "components[" + std::to_string(i) + "]"));
  try {
    return Curve(f, std::move(comps));
  } catch (const InvalidCurve& e) {
    throw ManifestError(std::string("invalid curve: ") + e.what());
  }
}

RatFuncOnCurve build_function(const Curve& curve, const FunctionText& t, const std::string& field) {
  const BiPoly p = parse_field(t.numerator, field + ".numerator");
  const BiPoly q = parse_field(t.denominator, field + ".denominator");
  try {
    return RatFuncOnCurve(curve, p, q);
  } catch (const NotInFunctionField& e) {
    throw ManifestError(field + ": " + e.what());
  }
}

}  // namespace realcurve
