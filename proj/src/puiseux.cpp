#include "realcurve/puiseux.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "realcurve/error.hpp"
#include "realcurve/roots.hpp"

namespace realcurve {

namespace {

// Bivariate polynomial over a quadratic field, c[i][j] = coeff of X^i Y^j.
struct QPoly2 {
  std::vector<std::vector<QuadNum>> c;

  int deg_x() const { return static_cast<int>(c.size()) - 1; }
  int deg_y() const {
    int d = -1;
    for (const auto& row : c) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
  }
  QuadNum at(int i, int j) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return QuadNum(0);
    const auto& row = c[static_cast<std::size_t>(i)];
    if (j < 0 || j >= static_cast<int>(row.size())) return QuadNum(0);
    return row[static_cast<std::size_t>(j)];
  }
  void add(int i, int j, const QuadNum& v) {
    if (v.is_zero()) return;
    if (static_cast<int>(c.size()) <= i) c.resize(static_cast<std::size_t>(i) + 1);
    auto& row = c[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) <= j) row.resize(static_cast<std::size_t>(j) + 1);
    row[static_cast<std::size_t>(j)] += v;
  }
  // Remove trailing zeros so deg_x and deg_y are exact.
  void trim() {
    for (auto& row : c)
      while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c.empty() && c.back().empty()) c.pop_back();
  }
};

Integer field_of(const QPoly2& f) {
  for (const auto& row : f.c)
    for (const auto& v : row)
      if (!v.is_rational()) return v.d();
  return 0;
}

Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// G(u0 + X, b + Y)
QPoly2 translate(const BiPoly& g, const QuadNum& u0, const QuadNum& b) {
  QPoly2 out;
  std::vector<QuadNum> pu{QuadNum(1)}, pb{QuadNum(1)};
  for (const auto& [e, coef] : g.monomials()) {
    const auto [i, j] = e;
    while (static_cast<int>(pu.size()) <= i) pu.push_back(pu.back() * u0);
    while (static_cast<int>(pb.size()) <= j) pb.push_back(pb.back() * b);
    for (int k = 0; k <= i; ++k) {
      const QuadNum ck = QuadNum(coef * binomial(i, k)) * pu[static_cast<std::size_t>(i - k)];
      if (ck.is_zero()) continue;
      for (int l = 0; l <= j; ++l)
        out.add(k, l, ck * QuadNum(binomial(j, l)) * pb[static_cast<std::size_t>(j - l)]);
    }
  }
  out.trim();
  return out;
}

// Smallest i with a nonzero coefficient at Y^j, or -1.
int min_x_at(const QPoly2& f, int j) {
  for (int i = 0; i <= f.deg_x(); ++i)
    if (!f.at(i, j).is_zero()) return i;
  return -1;
}

int order_in_y_at_origin(const QPoly2& f) {
  if (f.c.empty()) return -1;
  const auto& row = f.c[0];
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero()) return static_cast<int>(j);
  return -1;
}

bool divisible_by_y(const QPoly2& f) {
  for (const auto& row : f.c)
    if (!row.empty() && !row[0].is_zero()) return false;
  return true;
}

QPoly2 divide_by_y(const QPoly2& f) {
  QPoly2 out;
  for (std::size_t i = 0; i < f.c.size(); ++i)
    for (std::size_t j = 1; j < f.c[i].size(); ++j)
      out.add(static_cast<int>(i), static_cast<int>(j) - 1, f.c[i][j]);
  out.trim();
  return out;
}

struct Edge {
  int q, m, l;     // q*i + m*j = l along the edge
  int j_hi, j_lo;  // Y-range
};

// Compact edges of the Newton polygon from (0, r) down to the Y^0 axis.
std::vector<Edge> newton_edges(const QPoly2& f, int r) {
  std::vector<Edge> edges;
  int ic = 0, jc = r;
  while (jc > 0) {
    int best_i = -1, best_j = -1;
    Rational best_mu;
    for (int j = jc - 1; j >= 0; --j) {
      const int i = min_x_at(f, j);
      if (i < 0) continue;
      const Rational mu = make_rational(i - ic, jc - j);
      // ties go to the point farthest along the edge
      if (best_i < 0 || mu < best_mu || (mu == best_mu && j < best_j)) {
        best_mu = mu;
        best_i = i;
        best_j = j;
      }
    }
    if (best_i < 0) break;
    const int di = best_i - ic, dj = jc - best_j;
    const int g = std::gcd(di, dj);
    const int m = di / g, q = dj / g;
    edges.push_back({q, m, q * ic + m * jc, jc, best_j});
    ic = best_i;
    jc = best_j;
  }
  return edges;
}

// Univariate polynomials over a quadratic field, ascending.
using QPoly1 = std::vector<QuadNum>;

void trim1(QPoly1& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QuadNum eval1(const QPoly1& p, const QuadNum& z) {
  QuadNum acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Divide by (Z - z) when z is a root; returns false otherwise.
bool deflate(QPoly1& p, const QuadNum& z) {
  if (p.size() < 2 || !eval1(p, z).is_zero()) return false;
  QPoly1 q(p.size() - 1);
  QuadNum carry(0);
  for (std::size_t k = p.size() - 1; k >= 1; --k) {
    carry = p[k] + carry * z;
    q[k - 1] = carry;
  }
  p = std::move(q);
  trim1(p);
  return true;
}

struct EdgeRoot {
  QuadNum xi;
  int multiplicity;
  bool conjugate_pair;  // the conjugate root is not expanded separately
};

UniPoly rational_part(const QPoly1& p) {
  std::vector<Rational> c;
  for (const auto& v : p) {
    if (!v.is_rational()) throw Error("internal: expected rational coefficients");
    c.push_back(v.a());
  }
  return UniPoly(c);
}

std::vector<EdgeRoot> edge_roots(const QPoly1& phi, const Integer& d) {
  std::vector<EdgeRoot> out;
  const int degree = static_cast<int>(phi.size()) - 1;
  int found = 0;
  if (d == 0) {
    UniPoly p = rational_part(phi);
    const auto fac = factor_low_degree(p);
    for (const auto& r : fac.roots) {
      const int mult = multiplicity_at(p, r);
      out.push_back({QuadNum(r), mult, false});
      found += mult;
    }
    for (const auto& qd : fac.quadratics) {
      int mult = 0;
      UniPoly rest = p;
      while (divides(qd, rest)) {
        rest = exact_div(rest, qd);
        ++mult;
      }
      const Rational beta = qd[1], c = qd[0];
      const Rational disc = beta * beta - 4 * c;
      const QuadNum s = QuadNum::sqrt_of(disc);
      const QuadNum plus = (QuadNum(-beta) + s) / QuadNum(2);
      const QuadNum minus = (QuadNum(-beta) - s) / QuadNum(2);
      if (disc > 0) {
        out.push_back({minus, mult, false});
        out.push_back({plus, mult, false});
      } else {
        out.push_back({plus, mult, true});
      }
      found += 2 * mult;
    }
  } else {
    // Candidates are the roots of the norm that lie in Q(sqrt d).
    QPoly1 conj(phi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) conj[k] = phi[k].conj();
    QPoly1 norm(2 * phi.size() - 1, QuadNum(0));
    for (std::size_t i = 0; i < phi.size(); ++i)
      for (std::size_t j = 0; j < conj.size(); ++j) norm[i + j] += phi[i] * conj[j];
    trim1(norm);
    const auto fac = factor_low_degree(rational_part(norm));
    std::vector<QuadNum> cands;
    for (const auto& r : fac.roots) cands.emplace_back(r);
    for (const auto& qd : fac.quadratics) {
      const Rational beta = qd[1], c = qd[0];
      const Rational disc = beta * beta - 4 * c;
      if (!same_field(disc.get_num() * disc.get_den(), d)) continue;
      const QuadNum s = QuadNum::sqrt_of(disc);
      cands.push_back((QuadNum(-beta) - s) / QuadNum(2));
      cands.push_back((QuadNum(-beta) + s) / QuadNum(2));
    }
    QPoly1 rest = phi;
    for (const auto& z : cands) {
      int mult = 0;
      while (deflate(rest, z)) ++mult;
      if (mult > 0) {
        out.push_back({z, mult, false});
        found += mult;
      }
    }
  }
  if (found != degree)
    throw UnsupportedExtension("edge polynomial needs a field beyond one quadratic extension");
  return out;
}

// F(xi^v X^q, X^m (xi^u + Y)) / X^l
QPoly2 substitute(const QPoly2& f, const Edge& e, const QuadNum& xi, int u, int v) {
  QPoly2 out;
  std::vector<QuadNum> pw{QuadNum(1)};
  auto xi_pow = [&](int k) {
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * xi);
    return pw[static_cast<std::size_t>(k)];
  };
  for (int i = 0; i <= f.deg_x(); ++i) {
    const auto& row = f.c[static_cast<std::size_t>(i)];
    for (int j = 0; j < static_cast<int>(row.size()); ++j) {
      const QuadNum& a = row[static_cast<std::size_t>(j)];
      if (a.is_zero()) continue;
      const int xe = e.q * i + e.m * j - e.l;
      if (xe < 0) throw Error("internal: support below a Newton edge");
      const QuadNum base = a * xi_pow(v * i);
      for (int k = 0; k <= j; ++k)
        out.add(xe, k, base * QuadNum(binomial(j, k)) * xi_pow(u * (j - k)));
    }
  }
  out.trim();
  return out;
}

// Truncated series arithmetic.
Series mul(const Series& a, const Series& b, int terms) {
  Series out(static_cast<std::size_t>(terms), QuadNum(0));
  for (int i = 0; i < terms && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j < terms && j < static_cast<int>(b.size()); ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return out;
}

// Implicit-function series: the solution Y(T) of F(T, Y) = 0 with Y(0) = 0
// when F(0, 0) = 0 and dF/dY(0, 0) != 0.
Series implicit_series(const QPoly2& f, int terms) {
  Series phi(static_cast<std::size_t>(std::max(terms, 1)), QuadNum(0));
  const QuadNum a01 = f.at(0, 1);
  const int dy = f.deg_y();
  for (int n = 1; n < terms; ++n) {
    // [T^n] F(T, phi) with phi known below degree n
    const int t = n + 1;
    Series acc(static_cast<std::size_t>(t), QuadNum(0));
    for (int j = dy; j >= 0; --j) {
      acc = mul(acc, phi, t);
      for (int i = 0; i < t && i <= f.deg_x(); ++i) acc[static_cast<std::size_t>(i)] += f.at(i, j);
    }
    phi[static_cast<std::size_t>(n)] = -acc[static_cast<std::size_t>(n)] / a01;
  }
  return phi;
}

}  // namespace

struct BranchGenerator {
  std::size_t component = 0;
  BiPoly component_poly;
  QuadNum a, b;
  Rational lambda;
  QuadNum gamma{1};
  int e = 1;
  Series A;       // exact polynomial part of Y(T)
  QuadNum beta{1};
  int s = 0;      // Y(T) = A(T) + beta T^s phi(T)
  bool zero_tail = false;  // phi == 0
  QPoly2 terminal;         // phi solves terminal(T, phi) = 0 otherwise
  bool real = true;
  bool center_real = true;

  Series y_local(int terms) const {
    Series y(static_cast<std::size_t>(terms), QuadNum(0));
    for (int k = 0; k < terms && k < static_cast<int>(A.size()); ++k) y[static_cast<std::size_t>(k)] = A[static_cast<std::size_t>(k)];
    if (zero_tail || terms <= s) return y;
    const Series phi = implicit_series(terminal, terms - s);
    for (int k = 0; k + s < terms; ++k) y[static_cast<std::size_t>(k + s)] += beta * phi[static_cast<std::size_t>(k)];
    return y;
  }
};

namespace {

struct State {
  QPoly2 f;
  QuadNum gamma{1};
  int e = 1;
  Series A;
  QuadNum beta{1};
  int s = 0;
  bool real = true;
};

void expand(State st, const BranchGenerator& proto, std::vector<std::shared_ptr<BranchGenerator>>& out) {
  int r = order_in_y_at_origin(st.f);
  auto emit = [&](const State& cur, bool zero) {
    auto g = std::make_shared<BranchGenerator>(proto);
    g->gamma = cur.gamma;
    g->e = cur.e;
    g->A = cur.A;
    g->beta = cur.beta;
    g->s = cur.s;
    g->zero_tail = zero;
    if (!zero) g->terminal = cur.f;
    g->real = cur.real;
    out.push_back(std::move(g));
  };
  if (r < 1) return;
  if (r == 1) {
    emit(st, false);
    return;
  }
  if (divisible_by_y(st.f)) {
    emit(st, true);
    st.f = divide_by_y(st.f);
    expand(std::move(st), proto, out);
    return;
  }
  const Integer d = field_of(st.f);
  for (const Edge& edge : newton_edges(st.f, r)) {
    QPoly1 phi;
    for (int j = edge.j_lo; j <= edge.j_hi; j += edge.q) {
      const int i = (edge.l - edge.m * j) / edge.q;
      phi.push_back(st.f.at(i, j));
    }
    trim1(phi);
    // Bezout: u q - v m = 1 with 0 <= v < q
    int u = 0, v = 0;
    for (v = 0; v < edge.q; ++v)
      if ((1 + v * edge.m) % edge.q == 0) {
        u = (1 + v * edge.m) / edge.q;
        break;
      }
    for (const auto& root : edge_roots(phi, d)) {
      State next;
      next.f = substitute(st.f, edge, root.xi, u, v);
      next.gamma = st.gamma * root.xi.pow(v * st.e);
      next.e = st.e * edge.q;
      // A(xi^v T^q) + beta (xi^v T^q)^s xi^u T^m
      for (std::size_t k = 0; k < st.A.size(); ++k) {
        if (st.A[k].is_zero()) continue;
        const std::size_t pos = k * static_cast<std::size_t>(edge.q);
        if (next.A.size() <= pos) next.A.resize(pos + 1, QuadNum(0));
        next.A[pos] += st.A[k] * root.xi.pow(v * static_cast<int>(k));
      }
      const std::size_t lead = static_cast<std::size_t>(edge.q * st.s + edge.m);
      if (next.A.size() <= lead) next.A.resize(lead + 1, QuadNum(0));
      next.A[lead] += st.beta * root.xi.pow(v * st.s + u);
      next.beta = st.beta * root.xi.pow(v * st.s);
      next.s = static_cast<int>(lead);
      next.real = st.real && !root.conjugate_pair && root.xi.is_real();
      expand(std::move(next), proto, out);
    }
  }
}

int first_nonzero(const Series& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!s[k].is_zero()) return static_cast<int>(k);
  return -1;
}

int env_nmax() {
  if (const char* v = std::getenv("REALCURVE_NMAX")) {
    const int n = std::atoi(v);
    if (n > 0) return n;
  }
  return 64;
}

}  // namespace

Truncation default_truncation() {
  Truncation t;
  t.n_max = env_nmax();
  t.n = std::min(t.n, t.n_max);
  return t;
}

Branch::Branch(std::shared_ptr<const BranchGenerator> gen) : gen_(std::move(gen)) {}

std::size_t Branch::component() const { return gen_->component; }
const QuadNum& Branch::center_x() const { return gen_->a; }
const QuadNum& Branch::center_y() const { return gen_->b; }
int Branch::ram_index() const { return gen_->e; }
Realness Branch::realness() const { return gen_->real ? Realness::Real : Realness::ComplexConjugatePair; }
const QuadNum& Branch::gamma() const { return gen_->gamma; }
int Branch::multiplicity() const { return gen_->real || !gen_->center_real ? 1 : 2; }
const BiPoly& Branch::component_poly() const { return gen_->component_poly; }

Series Branch::y_series(int terms) const {
  Series y = gen_->y_local(terms);
  if (terms > 0) y[0] += gen_->b;
  return y;
}

Series Branch::x_series(int terms) const {
  Series y = gen_->y_local(terms);
  Series x(static_cast<std::size_t>(terms), QuadNum(0));
  for (int k = 0; k < terms; ++k) x[static_cast<std::size_t>(k)] = QuadNum(gen_->lambda) * y[static_cast<std::size_t>(k)];
  if (terms > 0) x[0] += gen_->a;
  if (gen_->e < terms) x[static_cast<std::size_t>(gen_->e)] += gen_->gamma;
  return x;
}

int Branch::y_order() const {
  for (int terms = 4 * gen_->e + 2; terms <= 64 * gen_->e + 2; terms *= 2) {
    const int k = first_nonzero(gen_->y_local(terms));
    if (k >= 0) return k;
    if (gen_->zero_tail) break;
  }
  return -1;
}

QuadNum Branch::y_leading() const {
  const int k = y_order();
  if (k < 0) return QuadNum(0);
  return gen_->y_local(k + 1)[static_cast<std::size_t>(k)];
}

std::string Branch::describe(int terms) const {
  return "x = " + to_string(x_series(terms)) + ", y = " + to_string(y_series(terms));
}

std::vector<Branch> puiseux_branches(const Curve& curve, const QuadNum& a, const QuadNum& b) {
  std::vector<Branch> out;
  const QuadNum u0 = a - QuadNum(curve.shear()) * b;
  for (std::size_t i = 0; i < curve.components().size(); ++i) {
    const QPoly2 f = translate(curve.sheared_component(i), u0, b);
    const int r = order_in_y_at_origin(f);
    if (r < 1 || !f.at(0, 0).is_zero()) continue;
    BranchGenerator proto;
    proto.component = i;
    proto.component_poly = curve.components()[i];
    proto.a = a;
    proto.b = b;
    proto.lambda = curve.shear();
    proto.center_real = a.is_real() && b.is_real();
    State st;
    st.f = f;
    st.real = a.is_real() && b.is_real();
    std::vector<std::shared_ptr<BranchGenerator>> gens;
    expand(std::move(st), proto, gens);
    int total = 0;
    for (const auto& g : gens) total += g->e * (g->real || !g->center_real ? 1 : 2);
    if (total != r) throw Error("internal: branch ramification does not add up to the local degree");
    for (auto& g : gens) out.emplace_back(std::move(g));
  }
  // canonical ordering
  struct Key {
    bool pair;
    Rational exponent;
    double re, im;
  };
  std::vector<std::pair<Key, Branch>> keyed;
  for (const auto& br : out) {
    const int k = br.y_order();
    const QuadNum lead = br.y_leading();
    keyed.push_back({{!br.is_real(), k < 0 ? Rational(1 << 30) : make_rational(k, br.ram_index()), lead.re(), lead.im()}, br});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    const Key &a = l.first, &b = r.first;
    if (a.pair != b.pair) return !a.pair;
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  out.clear();
  for (auto& [k, br] : keyed) out.push_back(br);
  return out;
}

std::vector<Branch> puiseux_branches(const Curve& curve, const Point& p) {
  if (!p.supported()) throw UnsupportedCenter("point coordinates are not in Q or a quadratic field: " + to_string(p));
  return puiseux_branches(curve, *p.x, *p.y);
}

Series compose_along(const Branch& br, const BiPoly& g, int terms) {
  const Series x = br.x_series(terms), y = br.y_series(terms);
  Series acc(static_cast<std::size_t>(terms), QuadNum(0));
  const auto& ys = g.y_coeffs();
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
    Series cx(static_cast<std::size_t>(terms), QuadNum(0));
    for (int i = it->degree(); i >= 0; --i) {
      cx = mul(cx, x, terms);
      cx[0] += QuadNum((*it)[i]);
    }
    acc = mul(acc, y, terms);
    for (int k = 0; k < terms; ++k) acc[static_cast<std::size_t>(k)] += cx[static_cast<std::size_t>(k)];
  }
  return acc;
}

BranchOrder branch_order(const Branch& br, const BiPoly& g, const Truncation& tr) {
  if (g.is_zero() || bi_divides(br.component_poly(), g)) return {true, 0};
  for (int n = tr.n; ; n *= 2) {
    const int steps = std::min(n, tr.n_max);
    const int terms = steps * br.ram_index() + 1;
    const int k = first_nonzero(compose_along(br, g, terms));
    if (k >= 0) return {false, k};
    if (steps >= tr.n_max) break;
  }
  throw PrecisionExhausted("order along branch exceeds the truncation ceiling " + std::to_string(tr.n_max));
}

BranchOrder branch_valuation(const Branch& br, const RatFuncOnCurve& r, const Truncation& tr) {
  const BranchOrder num = branch_order(br, r.numerator(), tr);
  if (num.infinite) return num;
  const BranchOrder den = branch_order(br, r.denominator(), tr);
  if (den.infinite) throw NotInFunctionField("denominator vanishes on the branch's component");
  return {false, num.value - den.value};
}

BranchLimit branch_limit(const Branch& br, const RatFuncOnCurve& r, const Truncation& tr) {
  const BranchOrder v = branch_valuation(br, r, tr);
  if (v.infinite || v.value > 0) return {false, QuadNum(0)};
  if (v.value < 0) return {true, QuadNum(0)};
  const BranchOrder num = branch_order(br, r.numerator(), tr);
  const int terms = num.value + 1;
  const QuadNum pn = compose_along(br, r.numerator(), terms)[static_cast<std::size_t>(num.value)];
  const QuadNum qn = compose_along(br, r.denominator(), terms)[static_cast<std::size_t>(num.value)];
  return {false, pn / qn};
}

std::string to_string(const Series& s, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].is_zero()) continue;
    std::string c = to_string(s[k]);
    bool neg = false;
    const bool compound = c.find(' ', 1) != std::string::npos;
    if (!compound && c[0] == '-') {
      neg = true;
      c = c.substr(1);
    }
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << (compound ? "(" + c + ")" : c) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  if (!s.empty()) os << " + O(" << var << "^" << s.size() << ")";
  return os.str();
}

std::string to_string(Realness r) { return r == Realness::Real ? "real" : "complex_conjugate_pair"; }

}  // namespace realcurve
