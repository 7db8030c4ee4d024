#pragma once

#include <cstddef>
#include <vector>

#include "realcurve/bipoly.hpp"

namespace realcurve {

/// Finitely many points of the complex plane encoded by a primitive
/// element: the points are (x(t), y(t)) for the roots t of `m`, distinct
/// roots giving distinct points. `x` and `y` are reduced modulo `m`.
/// A point is real iff its parameter is real.
struct SolutionFamily {
  UniPoly m;
  UniPoly x, y;
};

struct SolutionSet {
  Rational shear = 0;  // the parameter is x - shear * y
  std::vector<SolutionFamily> families;

  int complex_count() const;
  int real_count() const;
  /// Keep only the points where h vanishes.
  SolutionSet zeros_of(const BiPoly& h) const;
  /// Drop the points where h vanishes.
  SolutionSet nonzeros_of(const BiPoly& h) const;
};

/// h(x(t), y(t)) mod m.
UniPoly eval_mod(const BiPoly& h, const UniPoly& x, const UniPoly& y, const UniPoly& m);

/// All complex common zeros of f and g. Throws PositiveDimensional when
/// f and g share a nonconstant factor.
SolutionSet solve_system(const BiPoly& f, const BiPoly& g);

/// Number of distinct real common zeros.
std::size_t count_real_solutions(const BiPoly& f, const BiPoly& g);

}  // namespace realcurve
