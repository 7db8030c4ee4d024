#include "realcurve/curve.hpp"

#include "realcurve/error.hpp"
#include "realcurve/resultant.hpp"
#include "realcurve/roots.hpp"

namespace realcurve {

namespace {

// Probabilistic irreducibility check: an irreducible component specializes
// to an irreducible fiber polynomial for most vertical lines, so a
// component whose sample fibers all split over Q is suspicious.
bool fibers_all_split(const BiPoly& sheared) {
  const int n = sheared.deg_y();
  if (n < 2) return false;
  static const Rational samples[] = {Rational(7, 3), Rational(-11, 5), Rational(13, 7), Rational(-17, 4)};
  int tested = 0;
  for (const auto& u0 : samples) {
    const UniPoly fiber = sheared.at_x(u0);
    if (squarefree_part(fiber).degree() != n) continue;
    const auto fac = factor_low_degree(fiber);
    const bool split = !fac.roots.empty() || (!fac.quadratics.empty() && n > 2);
    if (!split) return false;
    ++tested;
  }
  return tested > 0;
}

}  // namespace

bool is_admissible_shear(const BiPoly& f, const Rational& s) {
  const BiPoly g = f.shear(s);
  return g.deg_y() >= 1 && g.coeff_y(g.deg_y()).degree() == 0;
}

Rational find_monic_shear(const BiPoly& f) {
  for (int i = 0; i < 200; ++i) {
    const int k = (i + 1) / 2;
    const Rational s = i == 0 ? Rational(0) : (i % 2 == 1 ? Rational(k) : Rational(-k));
    if (is_admissible_shear(f, s)) return s;
  }
  throw InvalidCurve("no admissible shear found");
}

Curve::Curve(const BiPoly& f, std::vector<BiPoly> components, std::optional<Rational> shear) {
  if (f.is_constant()) throw InvalidCurve("curve polynomial must be nonconstant");
  f_ = f.primitive();
  if (shear) {
    if (!is_admissible_shear(f_, *shear))
      throw InvalidCurve("shear " + to_string(*shear) + " does not make f monic in y");
    shear_ = *shear;
  } else {
    shear_ = find_monic_shear(f_);
  }
  sheared_f_ = f_.shear(shear_);
  if (resultant(sheared_f_, sheared_f_.diff_y(), Var::Y).is_zero())
    throw InvalidCurve("curve polynomial is not squarefree");

  if (components.empty()) {
    components_ = {f_};
  } else {
    BiPoly prod = BiPoly::constant(1);
    for (auto& c : components) {
      if (c.is_constant()) throw InvalidCurve("component must be nonconstant");
      c = c.primitive();
      prod *= c;
    }
    if (!(prod.primitive() == f_))
      throw InvalidCurve("components do not multiply to f up to a constant");
    components_ = std::move(components);
  }
  for (const auto& c : components_) sheared_components_.push_back(c.shear(shear_));
  for (std::size_t i = 0; i < components_.size(); ++i)
    for (std::size_t j = i + 1; j < components_.size(); ++j)
      if (resultant(sheared_components_[i], sheared_components_[j], Var::Y).is_zero())
        throw InvalidCurve("components " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not coprime");

  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (fibers_all_split(sheared_components_[i]))
      warnings_.push_back("component " + std::to_string(i) + " (" + to_string(components_[i]) +
                          ") may be reducible: every sampled fiber splits over Q");
  }
}

BiPoly Curve::reduce_sheared(const BiPoly& p) const {
  return divmod_y(p.shear(shear_), sheared_f_).second;
}

bool Curve::vanishes_on(const BiPoly& p) const { return reduce_sheared(p).is_zero(); }

bool Curve::vanishes_on_component(std::size_t i, const BiPoly& p) const {
  return divmod_y(p.shear(shear_), sheared_components_[i]).second.is_zero();
}

}  // namespace realcurve
