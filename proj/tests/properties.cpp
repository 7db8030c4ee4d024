#include "properties.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "realcurve/classify.hpp"
#include "realcurve/halfbranch.hpp"
#include "realcurve/ratfunc.hpp"
#include "realcurve/roots.hpp"

using namespace realcurve;

namespace props {

std::vector<Fixture> load_fixtures() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(FIXTURE_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& f : files) out.push_back({f, load_manifest(f)});
  return out;
}

namespace {

struct Affine {
  int a, b, c, d, e, g;
};

Affine random_affine(std::mt19937& rng) {
  std::uniform_int_distribution<int> lin(-2, 2), shift(-2, 2);
  for (;;) {
    Affine t{lin(rng), lin(rng), shift(rng), lin(rng), lin(rng), shift(rng)};
    if (t.a * t.e - t.b * t.d != 0) return t;
  }
}

BiPoly apply(const BiPoly& f, const Affine& t) {
  return f.affine(t.a, t.b, t.c, t.d, t.e, t.g);
}

Curve transformed(const Curve& c, const Affine& t) {
  std::vector<BiPoly> comps;
  if (c.reducible())
    for (const auto& p : c.components()) comps.push_back(apply(p, t));
  return Curve(apply(c.f(), t), comps);
}

void parity_at_points(const Curve& c, Result& r, const std::string& label) {
  for (const auto& p : singular_points(c).real_points) {
    if (!p.is_rational()) continue;
    const int hb = half_branch_count(c, p.x->a(), p.y->a());
    int real = 0;
    for (const auto& b : puiseux_branches(c, p)) real += b.is_real() ? 1 : 0;
    r.check(hb == 2 * real, label + " at " + to_string(p) + ": " + std::to_string(hb) + " half-branches vs " +
                                std::to_string(real) + " real places");
  }
}

UniPoly random_poly(std::mt19937& rng, int max_deg, int range) {
  std::uniform_int_distribution<int> deg(1, max_deg), coef(-range, range);
  const int n = deg(rng);
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(coef(rng));
  if (c.back() == 0) c.back() = 1;
  return UniPoly(c);
}

std::string status(const MembershipVerdict& v) { return to_string(v.status); }

}  // namespace

Result parity(const std::vector<Fixture>& fx, int copies, unsigned seed) {
  Result r;
  std::mt19937 rng(seed);
  for (const auto& f : fx) {
    const Curve c = build_curve(f.manifest);
    parity_at_points(c, r, f.manifest.name);
    for (int k = 0; k < copies; ++k) {
      const Affine t = random_affine(rng);
      parity_at_points(transformed(c, t), r, f.manifest.name + " copy " + std::to_string(k));
    }
  }
  return r;
}

Result sturm_vs_bisection(int count, unsigned seed) {
  Result r;
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) {
    UniPoly p = random_poly(rng, 8, 10);
    if (i % 5 == 0) p = p * p;
    r.check(sturm_count(p) == oracle::distinct_real_roots(p.coeffs()), "sturm count of " + to_string(p));
  }
  return r;
}

Result chain_and_egalite(const std::vector<Fixture>& fx) {
  Result r;
  for (const auto& f : fx) {
    const Curve c = build_curve(f.manifest);
    const CurveReport cr = analyze_curve(c);
    bool witness_found = false;
    for (std::size_t i = 0; i < f.manifest.functions.size(); ++i) {
      const auto& spec = f.manifest.functions[i];
      const std::string label = f.manifest.name + " " + spec.name;
      const RatFuncOnCurve fn = build_function(c, spec.text, "functions[" + std::to_string(i) + "]");
      const FunctionReport rep = analyze_function(c, fn);
      if (rep.regular.status == Tri::True) r.check(rep.in_o_x_closure.status == Tri::True, label + ": regular but not in O(X)'");
      if (rep.in_o_x_closure.status == Tri::True) r.check(rep.in_o_xprime.status == Tri::True, label + ": in O(X)' but not O(X')");
      if (rep.integral.status == Tri::True) r.check(rep.in_o_x_closure.status == Tri::True, label + ": integral but not in O(X)'");
      if (cr.totally_real_normalization == Tri::True)
        r.check(rep.in_o_xprime.status == rep.in_o_x_closure.status,
                label + ": O(X') " + status(rep.in_o_xprime) + " vs O(X)' " + status(rep.in_o_x_closure));
      if (rep.in_o_xprime.status == Tri::True && rep.in_o_x_closure.status == Tri::False) witness_found = true;
      if (rep.sr_cent.status == Tri::True)
        for (const auto& e : rep.limits) r.check(e.values.size() == 1, label + ": continuous but several limits");
      // every element of O(X') comes with a relation over SR(Cent X), and conversely
      Tri dep = Tri::Unknown;
      if (!spec.relation.empty()) {
        std::vector<RatFuncOnCurve> coeffs;
        for (const auto& t : spec.relation) coeffs.push_back(build_function(c, t, "relation"));
        dep = verify_integral_dependence(c, fn, coeffs);
      }
      if (rep.in_o_xprime.status == Tri::True) r.check(dep == Tri::True, label + ": no passing relation");
      if (dep == Tri::True) r.check(rep.in_o_xprime.status == Tri::True, label + ": relation but not in O(X')");
    }
    if (cr.totally_real_normalization == Tri::False)
      r.check(witness_found, f.manifest.name + ": no function separates O(X') from O(X)'");
  }
  return r;
}

Result charpoly_annihilates(const std::vector<Fixture>& fx) {
  Result r;
  for (const auto& f : fx) {
    const Curve c = build_curve(f.manifest);
    for (std::size_t i = 0; i < f.manifest.functions.size(); ++i) {
      const RatFuncOnCurve fn = build_function(c, f.manifest.functions[i].text, "f");
      const CharacteristicPoly m = characteristic_poly(c, fn);
      // sum_j c_j(u) P^j Q^(n-j) in sheared coordinates
      const BiPoly P = fn.numerator().shear(c.shear()), Q = fn.denominator().shear(c.shear());
      const int n = m.degree();
      BiPoly acc;
      for (int j = 0; j <= n; ++j)
        acc += BiPoly::from_x(m.coeffs[j]) * P.pow(j) * Q.pow(static_cast<unsigned>(n - j));
      r.check(divmod_y(acc, c.sheared()).second.is_zero(), f.manifest.name + " " + f.manifest.functions[i].name);
      r.check(n == c.sheared().deg_y(), f.manifest.name + ": degree of the characteristic polynomial");
    }
  }
  return r;
}

Result shear_invariance(const std::vector<Fixture>& fx, int shears, unsigned seed) {
  Result r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  for (const auto& f : fx) {
    const Curve c = build_curve(f.manifest);
    std::vector<Rational> chosen;
    while (static_cast<int>(chosen.size()) < shears) {
      const Rational s = make_rational(num(rng), den(rng));
      if (is_admissible_shear(c.f(), s)) chosen.push_back(s);
    }
    for (std::size_t i = 0; i < f.manifest.functions.size(); ++i) {
      const Tri base = is_integral_over_pol(c, build_function(c, f.manifest.functions[i].text, "f")).status;
      for (const auto& s : chosen) {
        const Curve cs(c.f(), c.reducible() ? c.components() : std::vector<BiPoly>{}, s);
        const Tri t = is_integral_over_pol(cs, build_function(cs, f.manifest.functions[i].text, "f")).status;
        r.check(t == base, f.manifest.name + " " + f.manifest.functions[i].name + " with shear " + to_string(s));
      }
    }
  }
  return r;
}

Result epsilon_halving(const std::vector<Fixture>& fx) {
  Result r;
  for (const auto& f : fx) {
    const Curve c = build_curve(f.manifest);
    for (const auto& p : singular_points(c).real_points) {
      if (!p.is_rational()) continue;
      const Rational a = p.x->a(), b = p.y->a();
      const Rational eps = admissible_radius(c, a, b);
      const int n = half_branch_count_at_radius(c, a, b, eps);
      for (int k = 1; k <= 3; ++k) {
        const Rational e = eps / (1 << k);
        r.check(half_branch_count_at_radius(c, a, b, e) == n, f.manifest.name + " at " + to_string(p));
      }
    }
  }
  return r;
}

}  // namespace props
