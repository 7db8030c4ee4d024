#include "realcurve/resultant.hpp"

#include <algorithm>

#include "realcurve/error.hpp"

namespace realcurve {

namespace {

using Matrix = std::vector<std::vector<UniPoly>>;

UniPoly uni_exact(const UniPoly& a, const UniPoly& b) { return exact_div(a, b); }

// Rows y^(count-1-i) * p written into columns indexed by descending power,
// `width` columns total (highest power width-1).
void push_shifted_rows(Matrix& rows, const BiPoly& p, int deg_p, int count, int width) {
  for (int i = 0; i < count; ++i) {
    std::vector<UniPoly> row(static_cast<std::size_t>(width));
    const int shift = count - 1 - i;
    for (int d = 0; d <= deg_p; ++d) {
      const int power = d + shift;
      row[static_cast<std::size_t>(width - 1 - power)] = p.coeff_y(d);
    }
    rows.push_back(std::move(row));
  }
}

}  // namespace

UniPoly sylvester_resultant_y(const BiPoly& f, const BiPoly& g, int deg_f, int deg_g) {
  const int size = deg_f + deg_g;
  if (size == 0) return UniPoly::constant(1);
  Matrix rows;
  push_shifted_rows(rows, f, deg_f, deg_g, size);
  push_shifted_rows(rows, g, deg_g, deg_f, size);
  return bareiss_determinant(std::move(rows), UniPoly::constant(1), uni_exact);
}

BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v) {
  if (v == Var::X) return resultant(f.swap_xy(), g.swap_xy(), Var::Y).swap_xy();
  if (f.is_zero() || g.is_zero()) return BiPoly{};
  return BiPoly::from_x(sylvester_resultant_y(f, g, f.deg_y(), g.deg_y()));
}

BiPoly subresultant_y(const BiPoly& f, const BiPoly& g, int k) {
  const int m = f.deg_y(), n = g.deg_y();
  if (k < 0 || k >= std::min(m, n)) throw Error("subresultant index out of range");
  const int width = m + n - k;
  Matrix rows;
  push_shifted_rows(rows, f, m, n - k, width);
  push_shifted_rows(rows, g, n, m - k, width);
  const int lead_cols = m + n - 2 * k - 1;
  std::vector<UniPoly> coeffs(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    Matrix sq;
    sq.reserve(rows.size());
    for (const auto& r : rows) {
      std::vector<UniPoly> row(r.begin(), r.begin() + lead_cols);
      row.push_back(r[static_cast<std::size_t>(width - 1 - j)]);
      sq.push_back(std::move(row));
    }
    coeffs[static_cast<std::size_t>(j)] =
        bareiss_determinant(std::move(sq), UniPoly::constant(1), uni_exact);
  }
  return BiPoly(std::move(coeffs));
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return sylvester_resultant_y(BiPoly::from_y(a), BiPoly::from_y(b), a.degree(), b.degree())[0];
}

}  // namespace realcurve
