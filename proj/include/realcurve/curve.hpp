#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "realcurve/bipoly.hpp"

namespace realcurve {

/// A real plane algebraic curve Z(f): f squarefree and primitive, given
/// with pairwise coprime components whose product is f up to a constant.
/// Components are user-asserted irreducible; without a component list f
/// itself is the single component.
///
/// `shear()` is a rational s such that f(x + s*y, y) has a constant
/// leading coefficient in y. The sheared forms are precomputed; all
/// reductions modulo f happen in those coordinates.
class Curve {
 public:
  explicit Curve(const BiPoly& f, std::vector<BiPoly> components = {},
                 std::optional<Rational> shear = std::nullopt);

  const BiPoly& f() const { return f_; }
  const std::vector<BiPoly>& components() const { return components_; }
  const Rational& shear() const { return shear_; }
  const BiPoly& sheared() const { return sheared_f_; }
  const BiPoly& sheared_component(std::size_t i) const { return sheared_components_[i]; }
  bool reducible() const { return components_.size() > 1; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  /// Remainder of p(x + s*y, y) by the sheared f, in sheared coordinates.
  BiPoly reduce_sheared(const BiPoly& p) const;
  /// p vanishes identically on X (p is a multiple of f).
  bool vanishes_on(const BiPoly& p) const;
  /// p is a multiple of component i.
  bool vanishes_on_component(std::size_t i, const BiPoly& p) const;
  /// Undo the shear: q(u, y) with u = x - s*y back to a polynomial in x, y.
  BiPoly unshear(const BiPoly& q) const { return q.shear(-shear_); }

 private:
  BiPoly f_;
  std::vector<BiPoly> components_;
  Rational shear_ = 0;
  BiPoly sheared_f_;
  std::vector<BiPoly> sheared_components_;
  std::vector<std::string> warnings_;
};

/// A rational s making f(x + s*y, y) have constant y-leading coefficient.
Rational find_monic_shear(const BiPoly& f);

/// True iff the sheared f has the constant-leading-coefficient property
/// for this s.
bool is_admissible_shear(const BiPoly& f, const Rational& s);

}  // namespace realcurve
