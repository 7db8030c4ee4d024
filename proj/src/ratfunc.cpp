#include "realcurve/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "realcurve/error.hpp"
#include "realcurve/resultant.hpp"
#include "realcurve/solve.hpp"

namespace realcurve {

namespace {

CharacteristicPoly charpoly_of(const BiPoly& g, const Rational& shear, const RatFuncOnCurve& r) {
  const BiPoly P = r.numerator().shear(shear), Q = r.denominator().shear(shear);
  const int n = g.deg_y();
  const int k = std::max(P.deg_y(), Q.deg_y());
  // Res_y(g, T Q - P) has degree n in T; interpolate at T = 0..n.
  std::vector<UniPoly> values;
  for (int t = 0; t <= n; ++t) values.push_back(sylvester_resultant_y(g, Q * Rational(t) - P, n, std::max(k, 0)));
  CharacteristicPoly m;
  m.shear = shear;
  m.coeffs.assign(static_cast<std::size_t>(n) + 1, UniPoly());
  for (int i = 0; i <= n; ++i) {
    UniPoly basis = UniPoly::constant(1);
    for (int j = 0; j <= n; ++j)
      if (j != i) basis = basis * UniPoly({Rational(-j), Rational(1)}) * (Rational(1) / (i - j));
    for (int d = 0; d <= basis.degree(); ++d) m.coeffs[d] += values[i] * basis[d];
  }
  return m;
}

std::string wrap(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }

// ---- local data over the real zeros of the denominator ----

struct Place {
  Branch branch;
  BranchOrder valuation;
  std::optional<BranchLimit> limit;
};

struct PoleSite {
  Point point;
  bool known = false;
  std::string note;
  std::vector<Place> places;

  bool central() const {
    return std::any_of(places.begin(), places.end(), [](const Place& p) { return p.branch.is_real(); });
  }
};

std::vector<PoleSite> pole_sites(const Curve& curve, const RatFuncOnCurve& r, const Truncation& tr) {
  std::vector<PoleSite> out;
  if (r.denominator().is_constant()) return out;
  for (const auto& p : real_zeros_on_curve(curve, r.denominator())) {
    PoleSite s;
    s.point = p;
    if (!p.supported()) {
      s.note = "coordinates outside Q and real quadratic fields";
      out.push_back(std::move(s));
      continue;
    }
    try {
      for (const auto& br : puiseux_branches(curve, p)) {
        Place pl{br, branch_valuation(br, r, tr), std::nullopt};
        if (pl.valuation.infinite || pl.valuation.value >= 0) pl.limit = branch_limit(br, r, tr);
        s.places.push_back(std::move(pl));
      }
      s.known = true;
    } catch (const UnsupportedExtension& e) {
      s.note = e.what();
    } catch (const PrecisionExhausted& e) {
      s.note = e.what();
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string place_text(const PoleSite& s, const Place& pl) {
  return std::string(pl.branch.is_real() ? "real" : "complex conjugate") + " place at " + to_string(s.point) +
         " (" + pl.branch.describe(4) + ")";
}

std::string valuation_text(const Place& pl) {
  return pl.valuation.infinite ? "infinite" : std::to_string(pl.valuation.value);
}

std::string limit_text(const Place& pl) {
  if (!pl.limit || pl.limit->infinite) return "infinity";
  return to_string(pl.limit->value);
}

// Valuation test over the poles; `all_places` includes conjugate pairs.
MembershipVerdict valuation_test(const std::vector<PoleSite>& sites, bool all_places, const Truncation& tr) {
  bool unknown = false;
  std::string witness;
  for (const auto& s : sites) {
    if (!s.known) {
      unknown = true;
      continue;
    }
    for (const auto& pl : s.places) {
      if (!all_places && !pl.branch.is_real()) continue;
      if (!pl.valuation.infinite && pl.valuation.value < 0)
        return MembershipVerdict::no("valuation " + valuation_text(pl) + " along the " + place_text(s, pl));
      witness += (witness.empty() ? "" : "; ") + to_string(s.point) + ": v=" + valuation_text(pl);
    }
  }
  if (unknown) return MembershipVerdict::unknown("unsupported pole; n_max=" + std::to_string(tr.n_max));
  if (witness.empty()) witness = "no relevant places over the real zeros of the denominator";
  return MembershipVerdict::yes("valuations >= 0: " + witness);
}

std::vector<std::string> distinct_limits(const PoleSite& s) {
  std::vector<std::string> out;
  for (const auto& pl : s.places) {
    if (!pl.branch.is_real()) continue;
    const std::string v = limit_text(pl);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

ContinuityResult continuity(const std::vector<PoleSite>& sites, const Truncation& tr) {
  ContinuityResult res;
  bool unknown = false;
  std::optional<std::string> failure;
  for (const auto& s : sites) {
    if (!s.known) {
      unknown = true;
      continue;
    }
    if (!s.central()) continue;
    LimitEntry e{s.point, distinct_limits(s)};
    if (!failure) {
      for (const auto& pl : s.places)
        if (pl.branch.is_real() && !pl.valuation.infinite && pl.valuation.value < 0) {
          failure = "valuation " + valuation_text(pl) + " along the " + place_text(s, pl);
          break;
        }
    }
    if (!failure && e.values.size() > 1) failure = "distinct limits " + e.values[0] + " and " + e.values[1] +
                                                   " along real places at " + to_string(s.point);
    res.limits.push_back(std::move(e));
  }
  if (failure)
    res.verdict = MembershipVerdict::no(*failure);
  else if (unknown)
    res.verdict = MembershipVerdict::unknown("unsupported pole; n_max=" + std::to_string(tr.n_max));
  else
    res.verdict = MembershipVerdict::yes(res.limits.empty() ? "denominator has no zeros on Cent X"
                                                            : "single limit at every pole on Cent X");
  return res;
}

// Necessary conditions for regularity: nonnegative valuation on every
// place over a real point, and one real value along all of them.
std::optional<std::string> irregularity_certificate(const std::vector<PoleSite>& sites) {
  for (const auto& s : sites) {
    if (!s.known) continue;
    std::optional<QuadNum> value;
    for (const auto& pl : s.places) {
      if (!pl.valuation.infinite && pl.valuation.value < 0)
        return "valuation " + valuation_text(pl) + " along the " + place_text(s, pl);
      const QuadNum v = pl.limit->value;
      if (!v.is_real()) return "non-real limit " + to_string(v) + " along the " + place_text(s, pl);
      if (value && *value != v)
        return "distinct limits " + to_string(*value) + " and " + to_string(v) + " at " + to_string(s.point);
      value = v;
    }
  }
  return std::nullopt;
}

// Nullspace of a dense rational matrix.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = 1 / m[row][c];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Representation {
  BiPoly p, q;
};

bool nonvanishing_on_real_points(const Curve& curve, const BiPoly& q) {
  for (std::size_t i = 0; i < curve.components().size(); ++i)
    if (curve.vanishes_on_component(i, q)) return false;
  return count_real_solutions(curve.f(), q) == 0;
}

// Search q' of total degree <= D with q' p = p' q modulo f and q' free of
// real zeros on X. The admissible q' form an ideal, so the sum of squares
// of a basis is tried when no single basis element works.
std::optional<Representation> search_representation(const Curve& curve, const RatFuncOnCurve& r, int D) {
  const BiPoly& g = curve.sheared();
  const int n = g.deg_y();
  const BiPoly Q = r.denominator().shear(curve.shear());
  std::vector<BiPoly> columns;
  std::vector<std::pair<int, int>> qmons;
  for (int t = 0; t <= D; ++t)
    for (int j = 0; j <= t; ++j) {
      qmons.emplace_back(t - j, j);
      columns.push_back(curve.reduce_sheared(BiPoly::term(1, t - j, j) * r.numerator()));
    }
  const int B = D + r.numerator().total_degree() + n;
  std::vector<std::pair<int, int>> pmons;
  for (int i = 0; i <= B; ++i)
    for (int j = 0; j < n; ++j) {
      pmons.emplace_back(i, j);
      columns.push_back(-divmod_y(BiPoly::term(1, i, j) * Q, g).second);
    }
  std::map<std::pair<int, int>, std::size_t> row_of;
  for (const auto& c : columns)
    for (const auto& [mon, coef] : c.monomials()) row_of.emplace(mon, 0);
  std::size_t idx = 0;
  for (auto& [mon, i] : row_of) i = idx++;
  std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(columns.size(), Rational(0)));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [mon, coef] : columns[c].monomials()) m[row_of[mon]][c] = coef;

  std::vector<Representation> cands;
  for (const auto& v : nullspace(std::move(m), columns.size())) {
    BiPoly::Monomials qm, pm;
    for (std::size_t i = 0; i < qmons.size(); ++i)
      if (v[i] != 0) qm[qmons[i]] = v[i];
    for (std::size_t i = 0; i < pmons.size(); ++i)
      if (v[qmons.size() + i] != 0) pm[pmons[i]] = v[qmons.size() + i];
    const BiPoly q1 = BiPoly::from_monomials(qm);
    if (q1.is_zero() || curve.vanishes_on(q1)) continue;
    cands.push_back({curve.unshear(BiPoly::from_monomials(pm)), q1});
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Representation& a, const Representation& b) {
    return a.q.total_degree() < b.q.total_degree();
  });
  const std::size_t tries = std::min<std::size_t>(cands.size(), 6);
  for (std::size_t i = 0; i < tries; ++i)
    if (nonvanishing_on_real_points(curve, cands[i].q)) return cands[i];
  if (cands.size() < 2) return std::nullopt;
  BiPoly sq, sp;
  for (const auto& c : cands) {
    sq += c.q * c.q;
    sp += c.q * c.p;
  }
  sq = curve.unshear(curve.reduce_sheared(sq));
  sp = curve.unshear(curve.reduce_sheared(sp));
  if (nonvanishing_on_real_points(curve, sq)) return Representation{sp, sq};
  return std::nullopt;
}

int effective_bound(const Curve& curve, const FunctionOptions& opt) {
  return opt.degree_bound >= 0 ? opt.degree_bound : 2 * curve.f().total_degree();
}

MembershipVerdict regularity(const Curve& curve, const RatFuncOnCurve& r, const std::vector<PoleSite>& sites,
                             const FunctionOptions& opt) {
  const BiPoly& q = r.denominator();
  if (sites.empty()) {
    MembershipVerdict v = MembershipVerdict::yes("denominator " + to_string(q) + " has no real zeros on X");
    v.representation = std::make_pair(r.numerator(), q);
    return v;
  }
  if (auto cert = irregularity_certificate(sites)) return MembershipVerdict::no(*cert);
  const int D = effective_bound(curve, opt);
  if (auto rep = search_representation(curve, r, D)) {
    MembershipVerdict v = MembershipVerdict::yes("r = (" + to_string(rep->p) + ") / (" + to_string(rep->q) + ") with " +
                                                 to_string(rep->q) + " having no real zeros on X");
    v.representation = std::make_pair(rep->p, rep->q);
    return v;
  }
  return MembershipVerdict::unknown("degree bound D=" + std::to_string(D));
}

MembershipVerdict integrality(const Curve& curve, const RatFuncOnCurve& r) {
  for (std::size_t i = 0; i < curve.components().size(); ++i) {
    const CharacteristicPoly m = characteristic_poly(curve, i, r);
    if (!m.integral())
      return MembershipVerdict::no("characteristic polynomial " + to_string(m) + " on component " +
                                   to_string(curve.components()[i]) + " has non-polynomial coefficients");
  }
  return MembershipVerdict::yes(to_string(characteristic_poly(curve, r)));
}

MembershipVerdict conjunction(const MembershipVerdict& a, const MembershipVerdict& b) {
  if (a.status == Tri::False) return a;
  if (b.status == Tri::False) return b;
  if (a.status == Tri::Unknown) return a;
  if (b.status == Tri::Unknown) return b;
  return MembershipVerdict::yes(a.witness + "; " + b.witness);
}

}  // namespace

std::pair<UniPoly, UniPoly> CharacteristicPoly::monic_coeff(int j) const {
  const UniPoly& num = coeffs.at(j);
  const UniPoly& den = coeffs.back();
  if (num.is_zero()) return {UniPoly(), UniPoly::constant(1)};
  const UniPoly g = poly_gcd(num, den);
  UniPoly a = exact_div(num, g), b = exact_div(den, g);
  const Rational lc = b.leading();
  return {a * (1 / lc), b * (1 / lc)};
}

bool CharacteristicPoly::integral() const {
  for (int j = 0; j < degree(); ++j)
    if (monic_coeff(j).second.degree() > 0) return false;
  return true;
}

BiPoly CharacteristicPoly::poly_coeff(int j) const {
  const auto [a, b] = monic_coeff(j);
  if (b.degree() > 0) throw Error("characteristic polynomial coefficient is not a polynomial");
  return BiPoly::from_x(a * (1 / b.leading())).shear(-shear);
}

CharacteristicPoly characteristic_poly(const Curve& curve, const RatFuncOnCurve& r) {
  return charpoly_of(curve.sheared(), curve.shear(), r);
}

CharacteristicPoly characteristic_poly(const Curve& curve, std::size_t component, const RatFuncOnCurve& r) {
  return charpoly_of(curve.sheared_component(component), curve.shear(), r);
}

std::string to_string(const CharacteristicPoly& m) {
  const int n = m.degree();
  auto power = [](int j) { return j == 1 ? std::string("T") : "T^" + std::to_string(j); };
  std::string out = power(n);
  for (int j = n - 1; j >= 0; --j) {
    const auto [a, b] = m.monic_coeff(j);
    if (a.is_zero()) continue;
    BiPoly num = BiPoly::from_x(a).shear(-m.shear);
    const BiPoly den = BiPoly::from_x(b).shear(-m.shear);
    std::string s = to_string(num);
    const bool neg = s[0] == '-';
    if (neg) s = to_string(-num);
    std::string body = den.is_constant() ? wrap(s) : wrap(s) + "/" + wrap(to_string(den));
    if (j > 0) body = body == "1" ? power(j) : body + "*" + power(j);
    out += (neg ? " - " : " + ") + body;
  }
  return out;
}

MembershipVerdict is_integral_over_pol(const Curve& curve, const RatFuncOnCurve& r) { return integrality(curve, r); }

MembershipVerdict regularity_on_x(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt) {
  return regularity(curve, r, pole_sites(curve, r, opt.truncation), opt);
}

MembershipVerdict is_in_o_xprime(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt) {
  return valuation_test(pole_sites(curve, r, opt.truncation), false, opt.truncation);
}

MembershipVerdict is_in_o_x_closure(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt) {
  return valuation_test(pole_sites(curve, r, opt.truncation), true, opt.truncation);
}

MembershipVerdict is_in_pol_xb(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt) {
  return conjunction(integrality(curve, r), regularity_on_x(curve, r, opt));
}

ContinuityResult extends_continuously_to_cent(const Curve& curve, const RatFuncOnCurve& r,
                                              const FunctionOptions& opt) {
  return continuity(pole_sites(curve, r, opt.truncation), opt.truncation);
}

Tri verify_integral_dependence(const Curve& curve, const RatFuncOnCurve& r,
                               const std::vector<RatFuncOnCurve>& coeffs, const FunctionOptions& opt) {
  if (coeffs.empty()) throw Error("integral dependence needs at least one coefficient");
  // Horner: ((r + c_{d-1}) r + c_{d-2}) r + ... + c_0
  RatFuncOnCurve acc = r + coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * r + coeffs[i];
  Tri out = tri(curve.vanishes_on(acc.numerator()));
  for (const auto& c : coeffs) out = tri_and(out, extends_continuously_to_cent(curve, c, opt).verdict.status);
  return out;
}

bool FunctionReport::has_unknown() const {
  for (const auto* v : {&integral, &regular, &in_o_xprime, &in_o_x_closure, &sr_cent, &in_pol_xb})
    if (v->status == Tri::Unknown) return true;
  return false;
}

FunctionReport analyze_function(const Curve& curve, const RatFuncOnCurve& r, const FunctionOptions& opt) {
  FunctionReport rep;
  rep.function = to_string(r);
  rep.charpoly = characteristic_poly(curve, r);
  const std::vector<PoleSite> sites = pole_sites(curve, r, opt.truncation);
  for (const auto& s : sites)
    if (!s.note.empty()) rep.warnings.push_back("pole " + to_string(s.point) + ": " + s.note);
  rep.integral = integrality(curve, r);
  rep.regular = regularity(curve, r, sites, opt);
  rep.in_o_xprime = valuation_test(sites, false, opt.truncation);
  rep.in_o_x_closure = valuation_test(sites, true, opt.truncation);
  ContinuityResult c = continuity(sites, opt.truncation);
  rep.sr_cent = std::move(c.verdict);
  rep.limits = std::move(c.limits);
  rep.in_pol_xb = conjunction(rep.integral, rep.regular);
  return rep;
}

}  // namespace realcurve
