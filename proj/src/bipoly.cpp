#include "realcurve/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "realcurve/error.hpp"

namespace realcurve {

namespace {

const UniPoly kZeroPoly{};

UniPoly content_y(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p.y_coeffs()) {
    g = poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly divide_by_x_poly(const BiPoly& p, const UniPoly& d) {
  std::vector<UniPoly> v;
  v.reserve(p.y_coeffs().size());
  for (const auto& c : p.y_coeffs()) v.push_back(exact_div(c, d));
  return BiPoly(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, division in y.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const int db = b.deg_y();
  const UniPoly& lb = b.coeff_y(db);
  while (!a.is_zero() && a.deg_y() >= db) {
    const int da = a.deg_y();
    BiPoly top = BiPoly::from_x(a.coeff_y(da)) * BiPoly::term(1, 0, da - db);
    a = a * BiPoly::from_x(lb) - top * b;
  }
  return a;
}

}  // namespace

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : c_(std::move(y_coeffs)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({UniPoly::constant(c)}); }
BiPoly BiPoly::x() { return BiPoly({UniPoly::x()}); }
BiPoly BiPoly::y() { return BiPoly({UniPoly{}, UniPoly::constant(1)}); }
BiPoly BiPoly::from_x(const UniPoly& p) { return BiPoly({p}); }

BiPoly BiPoly::from_y(const UniPoly& p) {
  std::vector<UniPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::term(const Rational& c, int dx, int dy) {
  std::vector<UniPoly> v(static_cast<std::size_t>(dy) + 1);
  v.back() = UniPoly::monomial(c, dx);
  return BiPoly(std::move(v));
}

BiPoly BiPoly::from_monomials(const Monomials& m) {
  int dy = -1;
  for (const auto& [e, c] : m) dy = std::max(dy, e.second);
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dy + 1));
  for (const auto& [e, c] : m) {
    auto& row = raw[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(row.size()) <= e.first) row.resize(static_cast<std::size_t>(e.first) + 1);
    row[static_cast<std::size_t>(e.first)] += c;
  }
  std::vector<UniPoly> v;
  v.reserve(raw.size());
  for (auto& r : raw) v.emplace_back(std::move(r));
  return BiPoly(std::move(v));
}

bool BiPoly::is_constant() const { return c_.empty() || (c_.size() == 1 && c_[0].is_constant()); }

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  return d;
}

const UniPoly& BiPoly::coeff_y(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return kZeroPoly;
  return c_[static_cast<std::size_t>(j)];
}

Rational BiPoly::coeff(int dx, int dy) const { return coeff_y(dy)[dx]; }

BiPoly::Monomials BiPoly::monomials() const {
  Monomials m;
  for (std::size_t j = 0; j < c_.size(); ++j)
    for (int i = 0; i <= c_[j].degree(); ++i)
      if (c_[j][i] != 0) m[{i, static_cast<int>(j)}] = c_[j][i];
  return m;
}

Rational BiPoly::top_form_at(const Rational& s) const {
  const int d = total_degree();
  Rational acc = 0;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const int i = d - static_cast<int>(j);
    if (i < 0) continue;
    const Rational& c = c_[j][i];
    if (c == 0) continue;
    Rational p = 1;
    for (int k = 0; k < i; ++k) p *= s;
    acc += c * p;
  }
  return acc;
}

Rational BiPoly::eval(const Rational& x0, const Rational& y0) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y0 + it->eval(x0);
  return acc;
}

UniPoly BiPoly::at_x(const Rational& x0) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.eval(x0));
  return UniPoly(std::move(v));
}

UniPoly BiPoly::at_y(const Rational& y0) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= y0;
    acc += *it;
  }
  return acc;
}

BiPoly BiPoly::diff_x() const {
  std::vector<UniPoly> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.derivative());
  return BiPoly(std::move(v));
}

BiPoly BiPoly::diff_y() const {
  if (c_.size() <= 1) return {};
  std::vector<UniPoly> v;
  for (std::size_t j = 1; j < c_.size(); ++j) v.push_back(c_[j] * Rational(static_cast<long>(j)));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::swap_xy() const {
  Monomials m;
  for (const auto& [e, c] : monomials()) m[{e.second, e.first}] = c;
  return from_monomials(m);
}

BiPoly BiPoly::compose(const BiPoly& px, const BiPoly& py) const {
  // Horner in y, each coefficient evaluated by Horner in x.
  BiPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    BiPoly cx;
    for (int i = it->degree(); i >= 0; --i) {
      cx *= px;
      cx += constant((*it)[i]);
    }
    acc *= py;
    acc += cx;
  }
  return acc;
}

BiPoly BiPoly::shear(const Rational& s) const {
  if (s == 0) return *this;
  return compose(x() + y() * s, y());
}

BiPoly BiPoly::affine(const Rational& a, const Rational& b, const Rational& c,
                      const Rational& d, const Rational& e, const Rational& g) const {
  return compose(x() * a + y() * b + constant(c), x() * d + y() * e + constant(g));
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly r = constant(1), base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

BiPoly BiPoly::primitive() const {
  if (c_.empty()) return {};
  Integer l = 1;
  for (const auto& [e, c] : monomials()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  const auto mons = monomials();
  for (const auto& [e, c] : mons) {
    Integer v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  // Sign from the leading monomial in descending (total, x) order.
  const Rational* lead = nullptr;
  int best_t = -1, best_x = -1;
  for (const auto& [e, c] : mons) {
    const int t = e.first + e.second;
    if (t > best_t || (t == best_t && e.first > best_x)) {
      best_t = t;
      best_x = e.first;
      lead = &c;
    }
  }
  Rational s = Rational(l) / Rational(g);
  if (*lead < 0) s = -s;
  return *this * s;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<UniPoly> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<BiPoly, BiPoly> divmod_y(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error("bivariate division by zero");
  const int db = b.deg_y();
  const UniPoly& lb = b.coeff_y(db);
  if (lb.degree() != 0) throw Error("divmod_y: divisor leading coefficient must be constant");
  const Rational inv = 1 / lb.leading();
  BiPoly q, r = a;
  while (!r.is_zero() && r.deg_y() >= db) {
    const int dr = r.deg_y();
    BiPoly t = BiPoly::from_x(r.coeff_y(dr) * inv) * BiPoly::term(1, 0, dr - db);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

namespace {

// Lex-order exact division; returns false if some leading coefficient fails
// to divide.
bool try_exact_div(BiPoly a, const BiPoly& d, BiPoly* quotient) {
  if (d.is_zero()) return a.is_zero();
  const int dd = d.deg_y();
  const UniPoly& ld = d.coeff_y(dd);
  BiPoly q;
  while (!a.is_zero()) {
    const int da = a.deg_y();
    if (da < dd) return false;
    auto [qc, rc] = divmod(a.coeff_y(da), ld);
    if (!rc.is_zero()) return false;
    BiPoly t = BiPoly::from_x(qc) * BiPoly::term(1, 0, da - dd);
    q += t;
    a -= t * d;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

}  // namespace

bool bi_divides(const BiPoly& d, const BiPoly& a) { return try_exact_div(a, d, nullptr); }

BiPoly bi_exact_div(const BiPoly& a, const BiPoly& d) {
  BiPoly q;
  if (!try_exact_div(a, d, &q)) throw Error("inexact bivariate division");
  return q;
}

BiPoly bi_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const UniPoly ca = content_y(a), cb = content_y(b);
  const UniPoly c = poly_gcd(ca, cb);
  BiPoly pa = divide_by_x_poly(a, ca), pb = divide_by_x_poly(b, cb);
  if (pa.deg_y() < pb.deg_y()) std::swap(pa, pb);
  while (!pb.is_zero() && pb.deg_y() > 0) {
    BiPoly r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = BiPoly{};
    } else {
      pb = divide_by_x_poly(r, content_y(r));
    }
  }
  BiPoly g = pb.is_zero() ? pa : BiPoly::constant(1);
  return (BiPoly::from_x(c) * g).primitive();
}

std::string to_string(const BiPoly& p, char xvar, char yvar) {
  if (p.is_zero()) return "0";
  auto mons = p.monomials();
  std::vector<std::pair<std::pair<int, int>, Rational>> terms(mons.begin(), mons.end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const int tl = l.first.first + l.first.second, tr = r.first.first + r.first.second;
    if (tl != tr) return tl > tr;
    return l.first.first > r.first.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, coef] : terms) {
    Rational c = coef;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const auto [i, j] = e;
    std::string mono;
    auto var = [&](char v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var(xvar, i);
    var(yvar, j);
    if (mono.empty()) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << mono;
    }
  }
  return os.str();
}

}  // namespace realcurve
