#include "realcurve/solve.hpp"

#include <optional>

#include "realcurve/error.hpp"
#include "realcurve/resultant.hpp"
#include "realcurve/roots.hpp"

namespace realcurve {

namespace {

Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

bool constant_leading_y(const BiPoly& p) {
  return p.deg_y() >= 1 && p.coeff_y(p.deg_y()).degree() == 0;
}

// Shear sequence 0, 1, -1, 2, -2, ...
Rational shear_candidate(int i) {
  if (i == 0) return 0;
  const int k = (i + 1) / 2;
  return (i % 2 == 1) ? Rational(k) : Rational(-k);
}

// Families for one shear, or nullopt when the shear fails to separate the
// points of some fiber.
std::optional<SolutionSet> solve_with_shear(const BiPoly& f, const BiPoly& g, const Rational& s) {
  BiPoly F = f.shear(s), G = g.shear(s);
  if (!constant_leading_y(F) || !constant_leading_y(G)) return std::nullopt;
  if (F.deg_y() < G.deg_y()) std::swap(F, G);
  const UniPoly res = sylvester_resultant_y(F, G, F.deg_y(), G.deg_y());
  if (res.is_zero()) throw PositiveDimensional("polynomials share a common component");
  SolutionSet out;
  out.shear = s;
  if (res.degree() == 0) return out;
  UniPoly rest = squarefree_part(res);
  const int n = G.deg_y();
  for (int k = 1; k <= n && rest.degree() >= 1; ++k) {
    BiPoly sub;
    UniPoly here, next;
    if (k < n) {
      sub = subresultant_y(F, G, k);
      const UniPoly psc = sub.coeff_y(k);
      next = poly_gcd(rest, psc);
      if (next.is_zero()) next = rest;
      here = exact_div(rest, next).monic();
    } else {
      sub = G;
      here = rest;
      next = UniPoly::constant(1);
    }
    if (here.degree() >= 1) {
      // On roots of `here` the fiber gcd is sub(t, y) = lead * (y - beta)^k.
      std::vector<UniPoly> c(static_cast<std::size_t>(k) + 1);
      for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(j)] = sub.coeff_y(j) % here;
      const UniPoly inv = inverse_mod(c[static_cast<std::size_t>(k)] * Rational(k), here);
      const UniPoly beta = (-(c[static_cast<std::size_t>(k - 1)] * inv)) % here;
      UniPoly pw = UniPoly::constant(1);
      const UniPoly minus_beta = -beta;
      for (int j = k; j >= 0; --j) {
        const UniPoly expect = (c[static_cast<std::size_t>(k)] * pw * binomial(k, j)) % here;
        if (!(expect == c[static_cast<std::size_t>(j)])) return std::nullopt;
        pw = (pw * minus_beta) % here;
      }
      const UniPoly xcoord = (UniPoly::x() + beta * s) % here;
      out.families.push_back({here, xcoord, beta});
    }
    rest = next;
  }
  return out;
}

}  // namespace

UniPoly eval_mod(const BiPoly& h, const UniPoly& x, const UniPoly& y, const UniPoly& m) {
  UniPoly acc;
  const auto& ys = h.y_coeffs();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
    UniPoly cx;
    for (int i = it->degree(); i >= 0; --i) cx = (cx * x + UniPoly::constant((*it)[i])) % m;
    acc = (acc * y + cx) % m;
  }
  return acc;
}

int SolutionSet::complex_count() const {
  int n = 0;
  for (const auto& fam : families) n += fam.m.degree();
  return n;
}

int SolutionSet::real_count() const {
  int n = 0;
  for (const auto& fam : families) n += sturm_count(fam.m);
  return n;
}

SolutionSet SolutionSet::zeros_of(const BiPoly& h) const {
  SolutionSet out;
  out.shear = shear;
  for (const auto& fam : families) {
    const UniPoly v = eval_mod(h, fam.x, fam.y, fam.m);
    const UniPoly g = v.is_zero() ? fam.m : poly_gcd(fam.m, v);
    if (g.degree() >= 1) out.families.push_back({g, fam.x % g, fam.y % g});
  }
  return out;
}

SolutionSet SolutionSet::nonzeros_of(const BiPoly& h) const {
  SolutionSet out;
  out.shear = shear;
  for (const auto& fam : families) {
    const UniPoly v = eval_mod(h, fam.x, fam.y, fam.m);
    if (v.is_zero()) continue;
    const UniPoly keep = exact_div(fam.m, poly_gcd(fam.m, v)).monic();
    if (keep.degree() >= 1) out.families.push_back({keep, fam.x % keep, fam.y % keep});
  }
  return out;
}

SolutionSet solve_system(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw PositiveDimensional("zero polynomial in system");
  if (f.is_constant() || g.is_constant()) return SolutionSet{};
  for (int i = 0; i < 200; ++i) {
    if (auto r = solve_with_shear(f, g, shear_candidate(i))) return *r;
  }
  throw Error("solve_system: no separating shear found");
}

std::size_t count_real_solutions(const BiPoly& f, const BiPoly& g) {
  return static_cast<std::size_t>(solve_system(f, g).real_count());
}

}  // namespace realcurve
