#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realcurve/bipoly.hpp"
#include "realcurve/manifest.hpp"

namespace realcurve {

/// Values of f at the (resolution + 1)^2 grid nodes of a window, row by
/// row from ymin upward. Evaluation is in double precision.
struct Grid {
  int n = 0;  // nodes per side
  std::vector<double> values;

  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * n + i]; }
};

Grid sign_grid_serial(const BiPoly& f, const PlotWindow& w);
/// Same values computed with OpenMP across rows.
Grid sign_grid_parallel(const BiPoly& f, const PlotWindow& w);

using Polyline = std::vector<std::pair<double, double>>;

/// Marching squares on the sign pattern f > 0, with segments chained into
/// polylines; a closed polyline repeats its first point at the end.
std::vector<Polyline> contour_polylines(const Grid& g, const PlotWindow& w);

struct PlotMark {
  enum class Kind { Singular, Isolated };
  double x = 0, y = 0;
  Kind kind = Kind::Singular;
};

std::string render_svg(const BiPoly& f, const PlotWindow& w, const std::vector<PlotMark>& marks);

}  // namespace realcurve
