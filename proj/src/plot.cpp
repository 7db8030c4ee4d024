#include "realcurve/plot.hpp"

#include <array>
#include <cstdio>
#include <map>
#include <sstream>

namespace realcurve {

namespace {

struct DenseDouble {
  std::vector<std::vector<double>> c;  // c[j][i] coefficient of x^i y^j

  explicit DenseDouble(const BiPoly& f) {
    for (const auto& cy : f.y_coeffs()) {
      std::vector<double> row;
      for (const auto& q : cy.coeffs()) row.push_back(q.get_d());
      c.push_back(std::move(row));
    }
  }

  double operator()(double x, double y) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      double cx = 0;
      for (auto jt = it->rbegin(); jt != it->rend(); ++jt) cx = cx * x + *jt;
      acc = acc * y + cx;
    }
    return acc;
  }
};

double node_x(const PlotWindow& w, int i) { return w.xmin + (w.xmax - w.xmin) * i / w.resolution; }
double node_y(const PlotWindow& w, int j) { return w.ymin + (w.ymax - w.ymin) * j / w.resolution; }

void fill_row(const DenseDouble& f, const PlotWindow& w, Grid& g, int j) {
  const double y = node_y(w, j);
  for (int i = 0; i < g.n; ++i) g.values[static_cast<std::size_t>(j) * g.n + i] = f(node_x(w, i), y);
}

Grid empty_grid(const PlotWindow& w) {
  Grid g;
  g.n = w.resolution + 1;
  g.values.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
  return g;
}

// Edge ids: 2*(j*n + i) for the edge (i,j)-(i+1,j), +1 for (i,j)-(i,j+1).
long h_edge(const Grid& g, int i, int j) { return 2L * (static_cast<long>(j) * g.n + i); }
long v_edge(const Grid& g, int i, int j) { return 2L * (static_cast<long>(j) * g.n + i) + 1; }

std::pair<double, double> edge_point(const Grid& g, const PlotWindow& w, long id) {
  const long node = id / 2;
  const int i = static_cast<int>(node % g.n), j = static_cast<int>(node / g.n);
  const bool vertical = id % 2 == 1;
  const int i1 = vertical ? i : i + 1, j1 = vertical ? j + 1 : j;
  const double v0 = g.at(i, j), v1 = g.at(i1, j1);
  const double t = v0 == v1 ? 0.5 : v0 / (v0 - v1);
  return {node_x(w, i) + t * (node_x(w, i1) - node_x(w, i)), node_y(w, j) + t * (node_y(w, j1) - node_y(w, j))};
}

}  // namespace

Grid sign_grid_serial(const BiPoly& f, const PlotWindow& w) {
  const DenseDouble d(f);
  Grid g = empty_grid(w);
  for (int j = 0; j < g.n; ++j) fill_row(d, w, g, j);
  return g;
}

Grid sign_grid_parallel(const BiPoly& f, const PlotWindow& w) {
  const DenseDouble d(f);
  Grid g = empty_grid(w);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < g.n; ++j) fill_row(d, w, g, j);
  return g;
}

std::vector<Polyline> contour_polylines(const Grid& g, const PlotWindow& w) {
  std::map<long, std::vector<long>> adj;
  auto link = [&](long a, long b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int j = 0; j + 1 < g.n; ++j)
    for (int i = 0; i + 1 < g.n; ++i) {
      const double v00 = g.at(i, j), v10 = g.at(i + 1, j), v11 = g.at(i + 1, j + 1), v01 = g.at(i, j + 1);
      const int code = (v00 > 0 ? 1 : 0) | (v10 > 0 ? 2 : 0) | (v11 > 0 ? 4 : 0) | (v01 > 0 ? 8 : 0);
      if (code == 0 || code == 15) continue;
      const long bottom = h_edge(g, i, j), top = h_edge(g, i, j + 1);
      const long left = v_edge(g, i, j), right = v_edge(g, i + 1, j);
      const bool center_pos = (v00 + v10 + v11 + v01) > 0;
      switch (code) {
        case 1: case 14: link(left, bottom); break;
        case 2: case 13: link(bottom, right); break;
        case 3: case 12: link(left, right); break;
        case 4: case 11: link(right, top); break;
        case 6: case 9: link(bottom, top); break;
        case 7: case 8: link(left, top); break;
        case 5:
          if (center_pos) { link(left, top); link(bottom, right); }
          else { link(left, bottom); link(right, top); }
          break;
        case 10:
          if (center_pos) { link(left, bottom); link(right, top); }
          else { link(left, top); link(bottom, right); }
          break;
        default: break;
      }
    }
  std::vector<Polyline> out;
  std::map<long, bool> used;
  auto walk = [&](long start) {
    std::vector<long> ids{start};
    used[start] = true;
    long cur = start;
    for (;;) {
      long next = -1;
      for (long nb : adj[cur])
        if (!used[nb]) {
          next = nb;
          break;
        }
      if (next < 0) break;
      used[next] = true;
      ids.push_back(next);
      cur = next;
    }
    Polyline pl;
    for (long id : ids) pl.push_back(edge_point(g, w, id));
    // closed when the last edge links back to the start
    if (ids.size() > 2)
      for (long nb : adj[cur])
        if (nb == start) {
          pl.push_back(pl.front());
          break;
        }
    out.push_back(std::move(pl));
  };
  // open chains first, from their endpoints, then loops
  for (const auto& [id, nbs] : adj)
    if (nbs.size() == 1 && !used[id]) walk(id);
  for (const auto& [id, nbs] : adj)
    if (!used[id]) walk(id);
  return out;
}

std::string render_svg(const BiPoly& f, const PlotWindow& w, const std::vector<PlotMark>& marks) {
  const double W = 600, H = 600 * (w.ymax - w.ymin) / (w.xmax - w.xmin);
  auto px = [&](double x) { return (x - w.xmin) / (w.xmax - w.xmin) * W; };
  auto py = [&](double y) { return (w.ymax - y) / (w.ymax - w.ymin) * H; };
  char buf[160];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.3f %.3f\">\n",
                W, H, W, H);
  os << buf;
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\">\n";
  if (w.ymin <= 0 && 0 <= w.ymax) {
    std::snprintf(buf, sizeof buf, "<line x1=\"0\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", py(0), W, py(0));
    os << buf;
  }
  if (w.xmin <= 0 && 0 <= w.xmax) {
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"0\" x2=\"%.3f\" y2=\"%.3f\"/>\n", px(0), px(0), H);
    os << buf;
  }
  os << "</g>\n";
  os << "<g class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& pl : contour_polylines(sign_grid_parallel(f, w), w)) {
    os << "<polyline points=\"";
    for (std::size_t k = 0; k < pl.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", px(pl[k].first), py(pl[k].second));
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto kind : {PlotMark::Kind::Singular, PlotMark::Kind::Isolated}) {
    const bool iso = kind == PlotMark::Kind::Isolated;
    os << (iso ? "<g class=\"isolated\" fill=\"red\">\n" : "<g class=\"singular\" fill=\"none\" stroke=\"blue\">\n");
    for (const auto& m : marks) {
      if (m.kind != kind) continue;
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%d\"/>\n", px(m.x), py(m.y), iso ? 5 : 4);
      os << buf;
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace realcurve
