#pragma once

// Independent reference computations used to check the library. Nothing
// here calls into realcurve's root finding or solving code.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;  // ascending coefficients

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Q eval(const Poly& p, const Q& t) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline Poly rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Taylor coefficients of p at c: p(c + h) = sum t[k] h^k.
inline Poly taylor_at(const Poly& p, const Q& c) {
  Poly t = p;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) t[j - 1] += c * t[j];
  return t;
}

// True when p certainly has no zero on [c - r, c + r] (centered form).
inline bool excludes_zero(const Poly& p, const Q& c, const Q& r) {
  const Poly t = taylor_at(p, c);
  Q spread = 0, rk = r;
  for (std::size_t k = 1; k < t.size(); ++k, rk *= r) spread += abs(t[k]) * rk;
  return t.empty() || abs(t[0]) > spread;
}

// Distinct real roots of a squarefree p in the open interval (lo, hi).
// Bisection: a piece where p cannot vanish holds no root; a piece where p'
// cannot vanish holds at most one, detected by a sign change.
inline int count_in(const Poly& p, const Poly& dp, const Q& lo, const Q& hi) {
  const Q c = (lo + hi) / 2, r = (hi - lo) / 2;
  if (excludes_zero(p, c, r)) return 0;
  if (excludes_zero(dp, c, r)) {
    const Q fa = eval(p, lo), fb = eval(p, hi);
    return ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) ? 1 : 0;
  }
  return count_in(p, dp, lo, c) + (eval(p, c) == 0 ? 1 : 0) + count_in(p, dp, c, hi);
}

inline Q root_bound(const Poly& p) {
  Q m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Q v = abs(p[i] / p.back());
    if (v > m) m = v;
  }
  return m + 1;
}

/// Number of distinct real roots of p.
inline int distinct_real_roots(Poly p) {
  trim(p);
  if (p.size() <= 1) return 0;
  Poly s = quotient(p, gcd(p, derivative(p)));
  const Q b = root_bound(s);
  return count_in(s, derivative(s), -b, b);
}

/// Numeric count of real intersections of two polynomial curves with a
/// circle, by sampling the angle densely and counting sign changes of f.
template <class F>
int circle_sign_changes(F f, double a, double b, double eps, int samples = 200000) {
  int changes = 0;
  double prev = f(a + eps, b);
  for (int i = 1; i <= samples; ++i) {
    const double th = 2 * M_PI * i / samples;
    const double v = f(a + eps * std::cos(th), b + eps * std::sin(th));
    if ((prev > 0 && v < 0) || (prev < 0 && v > 0)) ++changes;
    if (v != 0) prev = v;
  }
  return changes;
}

}  // namespace oracle
