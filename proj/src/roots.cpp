#include "realcurve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "realcurve/error.hpp"

namespace realcurve {

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& s) {
  std::vector<UniPoly> seq{s, s.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_at(const UniPoly& p, const ExtRational& v) {
  switch (v.kind) {
    case ExtRational::Kind::PosInf:
      return sgn(p.leading());
    case ExtRational::Kind::NegInf:
      return (p.degree() % 2 == 0 ? 1 : -1) * sgn(p.leading());
    default:
      return p.sign_at(v.value);
  }
}

int variations(const std::vector<UniPoly>& seq, const ExtRational& v) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sign_at(p, v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int coefficient_variations(const UniPoly& q) {
  int count = 0, last = 0;
  for (const auto& c : q.coeffs()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// (1+t)^n p((a + b t) / (1 + t)); its positive roots correspond to roots of p
// in (a, b).
UniPoly mobius_transform(const UniPoly& p, const Rational& a, const Rational& b) {
  const int n = p.degree();
  const UniPoly num({a, b});
  const UniPoly den({Rational(1), Rational(1)});
  std::vector<UniPoly> num_pow{UniPoly::constant(1)}, den_pow{UniPoly::constant(1)};
  for (int i = 1; i <= n; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  UniPoly q;
  for (int i = 0; i <= n; ++i)
    if (p[i] != 0) q += num_pow[i] * den_pow[n - i] * p[i];
  return q;
}

struct OpenInterval {
  Rational a, b;
  bool exact;
};

void descartes_isolate(const UniPoly& p, const Rational& a, const Rational& b,
                       std::vector<OpenInterval>& out) {
  const int v = coefficient_variations(mobius_transform(p, a, b));
  if (v == 0) return;
  if (v == 1) {
    out.push_back({a, b, false});
    return;
  }
  const Rational mid = (a + b) / 2;
  descartes_isolate(p, a, mid, out);
  if (p.eval(mid) == 0) out.push_back({mid, mid, true});
  descartes_isolate(p, mid, b, out);
}

}  // namespace

int sturm_count(const UniPoly& p, const ExtRational& lo, const ExtRational& hi) {
  if (p.is_zero()) throw Error("sturm_count of the zero polynomial");
  const UniPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  const auto seq = sturm_sequence(s);
  return std::max(0, variations(seq, lo) - variations(seq, hi));
}

int sturm_count(const UniPoly& p) {
  return sturm_count(p, ExtRational::neg_inf(), ExtRational::pos_inf());
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval eval_interval(const UniPoly& p, const Interval& box) {
  Interval acc{0, 0};
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * box;
    acc.lo += p[i];
    acc.hi += p[i];
  }
  return acc;
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[i] / p.leading())));
  return m + 1;
}

RealAlgebraic RealAlgebraic::rational(const Rational& q) {
  RealAlgebraic r;
  r.poly_ = UniPoly({-q, Rational(1)}).primitive();
  r.lo_ = r.hi_ = q;
  return r;
}

RealAlgebraic::RealAlgebraic(const UniPoly& poly, const Rational& lo, const Rational& hi)
    : poly_(poly.primitive()), lo_(lo), hi_(hi) {
  if (poly_.degree() < 1) throw Error("RealAlgebraic needs a nonconstant polynomial");
  if (lo_ == hi_) {
    if (poly_.eval(lo_) != 0) throw Error("RealAlgebraic: rational endpoint is not a root");
    return;
  }
  if (lo_ > hi_ || poly_.eval(lo_) == 0 || poly_.eval(hi_) == 0 ||
      sturm_count(poly_, ExtRational::finite(lo_), ExtRational::finite(hi_)) != 1)
    throw Error("RealAlgebraic: interval does not isolate a single root");
  if (!(squarefree_part(poly_).degree() == poly_.degree()))
    throw Error("RealAlgebraic: polynomial must be squarefree");
}

RealAlgebraic RealAlgebraic::bisected() const {
  if (is_rational()) return *this;
  RealAlgebraic r = *this;
  const Rational mid = (lo_ + hi_) / 2;
  const int sm = poly_.sign_at(mid);
  if (sm == 0) {
    r.lo_ = r.hi_ = mid;
  } else if (sm == poly_.sign_at(lo_)) {
    r.lo_ = mid;
  } else {
    r.hi_ = mid;
  }
  return r;
}

RealAlgebraic RealAlgebraic::refined_to(const Rational& width) const {
  RealAlgebraic r = *this;
  while (!r.is_rational() && r.hi_ - r.lo_ > width) r = r.bisected();
  return r;
}

double RealAlgebraic::approx() const {
  const RealAlgebraic r = refined_to(Rational(1, 1u << 30));
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw Error("isolate_real_roots of the zero polynomial");
  const UniPoly s = squarefree_part(p).primitive();
  std::vector<RealAlgebraic> out;
  if (s.degree() <= 0) return out;
  const Rational bound = cauchy_bound(s);
  std::vector<OpenInterval> raw;
  descartes_isolate(s, -bound, bound, raw);
  for (auto& iv : raw) {
    if (iv.exact) {
      out.push_back(RealAlgebraic::rational(iv.a));
      continue;
    }
    Rational a = iv.a, b = iv.b;
    bool exact = false;
    while (s.eval(a) == 0 || s.eval(b) == 0) {
      const Rational mid = (a + b) / 2;
      if (s.eval(mid) == 0) {
        exact = true;
        a = b = mid;
        break;
      }
      // Exactly one root in the open interval; keep the half holding it.
      if (sturm_count(s, ExtRational::finite(a), ExtRational::finite(mid)) >= 1)
        b = mid;
      else
        a = mid;
    }
    if (exact)
      out.push_back(RealAlgebraic::rational(a));
    else
      out.emplace_back(s, a, b);
  }
  // Pin rational roots to degenerate intervals.
  bool has_inexact = false;
  for (const auto& r : out) has_inexact = has_inexact || !r.is_rational();
  if (has_inexact) {
    for (const auto& q : factor_low_degree(s).roots)
      for (auto& r : out)
        if (!r.is_rational() && r.lo() < q && q < r.hi()) r = RealAlgebraic::rational(q);
  }
  return out;
}

int alg_sign(const UniPoly& p, const RealAlgebraic& alpha) {
  if (alpha.is_rational()) return p.sign_at(alpha.lo());
  const UniPoly r = p % alpha.poly();
  if (r.is_zero()) return 0;
  const UniPoly g = poly_gcd(alpha.poly(), r);
  if (g.degree() >= 1 &&
      sturm_count(g, ExtRational::finite(alpha.lo()), ExtRational::finite(alpha.hi())) == 1)
    return 0;
  RealAlgebraic a = alpha;
  for (;;) {
    if (a.is_rational()) return p.sign_at(a.lo());
    const Interval v = eval_interval(r, a.interval());
    if (v.lo > 0) return 1;
    if (v.hi < 0) return -1;
    a = a.bisected();
  }
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

namespace {

using Cx = std::complex<long double>;

// Aberth iteration on a monic polynomial with long double coefficients.
std::vector<Cx> approximate_roots(const std::vector<long double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Cx> z(static_cast<std::size_t>(n));
  long double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::fabs(c[static_cast<std::size_t>(i)]));
  radius = std::min(radius, 1e300L);
  for (int k = 0; k < n; ++k) {
    const long double ang = 2.0L * 3.14159265358979323846L * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, ang);
  }
  auto eval = [&](const Cx& w, Cx& d) {
    Cx p = 0;
    d = 0;
    for (int i = n; i >= 0; --i) {
      d = d * w + p;
      p = p * w + c[static_cast<std::size_t>(i)];
    }
    return p;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double step = 0;
    for (int k = 0; k < n; ++k) {
      Cx d;
      const Cx& zk = z[static_cast<std::size_t>(k)];
      const Cx p = eval(zk, d);
      if (p == Cx(0)) continue;
      const Cx ratio = p / d;
      Cx sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
      const Cx w = ratio / (1.0L - ratio * sum);
      z[static_cast<std::size_t>(k)] -= w;
      step = std::max(step, std::abs(w) / (1 + std::abs(zk)));
    }
    if (step < 1e-18L) break;
  }
  return z;
}

std::optional<Integer> nearest_integer(long double v, long double tol) {
  if (!std::isfinite(v) || std::fabs(v) > 9e18L) return std::nullopt;
  const long double r = std::nearbyint(v);
  if (std::fabs(v - r) > tol * std::max(1.0L, std::fabs(v))) return std::nullopt;
  Integer out;
  mpz_set_si(out.get_mpz_t(), static_cast<long>(r));
  return out;
}

}  // namespace

LowDegreeFactors factor_low_degree(const UniPoly& p) {
  if (p.is_zero()) throw Error("factor_low_degree of the zero polynomial");
  LowDegreeFactors out;
  const UniPoly s = squarefree_part(p).primitive();
  if (s.degree() <= 0) {
    out.residual = UniPoly::constant(1);
    return out;
  }
  // Monic integral model m(w) = lc^(n-1) s(w / lc); roots scale by lc.
  const Rational lc = s.leading();
  UniPoly m = (s.scale(1 / lc) * (1 / s.scale(1 / lc).leading()));
  for (;;) {
    const int n = m.degree();
    if (n <= 0) break;
    if (n == 1) {
      out.roots.push_back(-m[0] / lc);
      m = UniPoly::constant(1);
      break;
    }
    std::vector<long double> cf;
    for (int i = 0; i <= n; ++i) cf.push_back(static_cast<long double>(m[i].get_d()));
    const auto z = approximate_roots(cf);
    bool progress = false;
    for (const auto& w : z) {
      if (std::fabs(w.imag()) > 1e-6L * (1 + std::abs(w))) continue;
      auto k = nearest_integer(w.real(), 1e-6L);
      if (!k) continue;
      if (m.eval(Rational(*k)) == 0) {
        out.roots.push_back(Rational(*k) / lc);
        m = exact_div(m, UniPoly({-Rational(*k), Rational(1)}));
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (std::size_t i = 0; i < z.size() && !progress; ++i) {
      for (std::size_t j = i + 1; j < z.size() && !progress; ++j) {
        const Cx sum = z[i] + z[j], prod = z[i] * z[j];
        if (std::fabs(sum.imag()) > 1e-6L * (1 + std::abs(sum))) continue;
        if (std::fabs(prod.imag()) > 1e-6L * (1 + std::abs(prod))) continue;
        auto ks = nearest_integer(sum.real(), 1e-6L), kp = nearest_integer(prod.real(), 1e-6L);
        if (!ks || !kp) continue;
        const UniPoly quad({Rational(*kp), -Rational(*ks), Rational(1)});
        if (!divides(quad, m)) continue;
        m = exact_div(m, quad);
        // Rescale w = lc * z back to a monic quadratic in z.
        const Rational b = -Rational(*ks) / lc, c = Rational(*kp) / (lc * lc);
        if (auto r = rational_sqrt(b * b - 4 * c)) {
          out.roots.push_back((-b + *r) / 2);
          out.roots.push_back((-b - *r) / 2);
        } else {
          out.quadratics.push_back(UniPoly({c, b, Rational(1)}));
        }
        progress = true;
      }
    }
    if (!progress) break;
  }
  // Residual expressed in the original variable.
  out.residual = m.degree() <= 0 ? UniPoly::constant(1) : m.scale(lc).monic();
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace realcurve
