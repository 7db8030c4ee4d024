#pragma once

#include <vector>

#include "realcurve/bipoly.hpp"

namespace realcurve {

enum class Var { X, Y };

/// Sylvester resultant eliminating `v`, with the rows of `f` placed first.
/// Res(f, c) = c^deg(f) for a constant c; two constants give 1.
BiPoly resultant(const BiPoly& f, const BiPoly& g, Var v);

/// Sylvester determinant in y with formal degrees (leading coefficients may
/// vanish). Result is a polynomial in x.
UniPoly sylvester_resultant_y(const BiPoly& f, const BiPoly& g, int deg_f, int deg_g);

/// k-th subresultant of f and g in y (0 <= k < min(deg_y f, deg_y g)),
/// computed from the minors of the Sylvester matrix; S_0 is the resultant.
BiPoly subresultant_y(const BiPoly& f, const BiPoly& g, int k);

/// Univariate resultant over Q.
Rational resultant(const UniPoly& a, const UniPoly& b);

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// division is exact. `Exact` is called as exact(a, b) returning a / b.
template <class T, class Exact>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, Exact exact) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == T{}) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == T{}) ++r;
      if (r == n) return T{};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact(v, prev);
      }
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return negate ? T{} - d : d;
}

}  // namespace realcurve
