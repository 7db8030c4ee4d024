#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "realcurve/error.hpp"
#include "realcurve/halfbranch.hpp"
#include "realcurve/parser.hpp"
#include "realcurve/puiseux.hpp"

using namespace realcurve;

namespace {

Curve curve(const char* f) { return Curve(parse_poly(f)); }

double eval_d(const BiPoly& f, double x, double y) {
  double acc = 0;
  for (const auto& [e, c] : f.monomials()) acc += c.get_d() * std::pow(x, e.first) * std::pow(y, e.second);
  return acc;
}

RatFuncOnCurve fn(const Curve& c, const char* p, const char* q) { return parse_ratfunc(p, q, c); }

}  // namespace

TEST_CASE("half-branch counts") {
  CHECK(half_branch_count(curve("y^2 - x^2*(x-1)"), 0, 0) == 0);
  CHECK(half_branch_count(curve("y^2 - x^2*(x+1)"), 0, 0) == 4);
  CHECK(half_branch_count(curve("y^2 - x^3"), 0, 0) == 2);
  CHECK(half_branch_count(curve("x^2 + y^2 - 1"), 1, 0) == 2);
  CHECK(half_branch_count(curve("x^2 + y^2 - 1"), 0, 0) == 0);
  CHECK(half_branch_count(Curve(parse_poly("x*y"), {parse_poly("x"), parse_poly("y")}), 0, 0) == 4);
}

TEST_CASE("half-branch counts match a numeric circle oracle") {
  const char* curves[] = {"y^2 - x^2*(x+1)", "y^2 - x^3", "y^2 - x^2*(x-1)", "(x^2+y^2)^2 - 2*(x^2-y^2)",
                          "y^3 - x^5", "y^2 - x^4 + x^5"};
  for (const char* s : curves) {
    CAPTURE(s);
    const Curve c = curve(s);
    const Rational eps = admissible_radius(c, 0, 0);
    const BiPoly f = c.f();
    const int numeric = oracle::circle_sign_changes(
        [&](double x, double y) { return eval_d(f, x, y); }, 0.0, 0.0, eps.get_d());
    CHECK(half_branch_count(c, 0, 0) == numeric);
  }
}

TEST_CASE("circle components centered at the point") {
  // concentric circle of radius 1/2 plus the cusp
  const BiPoly circ = parse_poly("x^2 + y^2 - 1/4"), cusp = parse_poly("y^2 - x^3");
  const Curve c(circ * cusp, {circ, cusp});
  const Rational eps = admissible_radius(c, 0, 0);
  CHECK(eps < Rational(1, 2));
  CHECK(half_branch_count(c, 0, 0) == 2);
}

TEST_CASE("radius halving leaves the count unchanged") {
  for (const char* s : {"y^2 - x^2*(x+1)", "y^2 - x^3", "y^2 - x^2*(x-1)", "(x^2+y^2)^2 - 2*(x^2-y^2)"}) {
    const Curve c = curve(s);
    const Rational eps = admissible_radius(c, 0, 0);
    const int n = half_branch_count_at_radius(c, 0, 0, eps);
    CHECK(half_branch_count_at_radius(c, 0, 0, eps / 2) == n);
    CHECK(half_branch_count_at_radius(c, 0, 0, eps / 4) == n);
  }
}

TEST_CASE("cusp branch") {
  const Curve c = curve("y^2 - x^3");
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  REQUIRE(br.size() == 1);
  CHECK(br[0].is_real());
  CHECK(br[0].ram_index() == 2);
  // x = gamma t^2 along the branch, y of order 3
  CHECK(br[0].y_order() == 3);
  const Series x = br[0].x_series(8), y = br[0].y_series(8);
  for (int k = 0; k < 8; ++k) {
    CHECK(x[static_cast<std::size_t>(k)].is_zero() == (k != 2));
    CHECK(y[static_cast<std::size_t>(k)].is_zero() == (k != 3));
  }
  // y^2 = x^3 forces leading coefficients with c_y^2 = gamma^3
  CHECK(y[3] * y[3] == x[2].pow(3));
  CHECK(branch_valuation(br[0], fn(c, "x", "1")).value == 2);
  CHECK(branch_valuation(br[0], fn(c, "y", "x")).value == 1);
  CHECK(branch_limit(br[0], fn(c, "y", "x")).value.is_zero());
  CHECK(branch_limit(br[0], fn(c, "1", "x")).infinite);
}

TEST_CASE("node branches follow the binomial series") {
  const Curve c = curve("y^2 - x^2*(x+1)");
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  REQUIRE(br.size() == 2);
  // y = +-x sqrt(1 + x) = +-(x + x^2/2 - x^3/8 + x^4/16 - 5x^5/128 + ...)
  const Rational binom[] = {0, 1, Rational(1, 2), Rational(-1, 8), Rational(1, 16), Rational(-5, 128)};
  int signs = 0;
  for (const auto& b : br) {
    CHECK(b.is_real());
    CHECK(b.ram_index() == 1);
    const Series x = b.x_series(6), y = b.y_series(6);
    REQUIRE(x[1].is_rational());
    const Rational g = x[1].a();
    CHECK(x[0].is_zero());
    for (int k = 2; k < 6; ++k) CHECK(x[static_cast<std::size_t>(k)].is_zero());
    const int sgn_b = sgn(y[1].a() / g);
    signs += sgn_b;
    Rational gk = 1;
    for (int k = 1; k < 6; ++k) {
      gk *= g;
      CHECK(y[static_cast<std::size_t>(k)] == QuadNum(binom[k] * sgn_b * gk));
    }
  }
  CHECK(signs == 0);
  CHECK(branch_limit(br[0], fn(c, "y", "x")).value == QuadNum(-1));
  CHECK(branch_limit(br[1], fn(c, "y", "x")).value == QuadNum(1));
}

TEST_CASE("isolated point has one conjugate pair") {
  const Curve c = curve("y^2 - x^2*(x-1)");
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  REQUIRE(br.size() == 1);
  CHECK(br[0].realness() == Realness::ComplexConjugatePair);
  CHECK(br[0].multiplicity() == 2);
  CHECK(br[0].ram_index() == 1);
  const Series x = br[0].x_series(3), y = br[0].y_series(3);
  // y / x -> +-i
  const QuadNum slope = y[1] / x[1];
  CHECK(slope * slope == QuadNum(-1));
  CHECK(branch_valuation(br[0], fn(c, "1", "x")).value == -1);
  CHECK(branch_valuation(br[0], fn(c, "x^2", "x^2 + y^2")).value == -1);
}

TEST_CASE("axes give two smooth real branches") {
  const Curve c(parse_poly("x*y"), {parse_poly("x"), parse_poly("y")});
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  REQUIRE(br.size() == 2);
  for (const auto& b : br) {
    CHECK(b.is_real());
    CHECK(b.ram_index() == 1);
  }
  CHECK(br[0].component() != br[1].component());
}

TEST_CASE("higher singularities") {
  SUBCASE("tacnode: two real branches tangent to the x-axis") {
    const auto br = puiseux_branches(curve("y^2 - x^4 + x^5"), QuadNum(0), QuadNum(0));
    REQUIRE(br.size() == 2);
    for (const auto& b : br) CHECK(b.y_order() == 2);
  }
  SUBCASE("E6 type y^3 = x^4") {
    const auto br = puiseux_branches(curve("y^3 - x^4"), QuadNum(0), QuadNum(0));
    REQUIRE(br.size() == 1);
    CHECK(br[0].ram_index() == 3);
    CHECK(br[0].is_real());
  }
  SUBCASE("(y^2 - x^3)^2 - x^7 splits into two cusps") {
    const auto br = puiseux_branches(curve("(y^2 - x^3)^2 - x^7"), QuadNum(0), QuadNum(0));
    REQUIRE(br.size() == 2);
    for (const auto& b : br) CHECK(b.ram_index() == 2);
  }
  SUBCASE("two characteristic pairs (y^2 - x^3)^2 - 4x^5y - x^7") {
    const BiPoly f = parse_poly("(y^2 - x^3)^2 - 4*x^5*y - x^7");
    const auto br = puiseux_branches(Curve(f), QuadNum(0), QuadNum(0));
    REQUIRE(br.size() == 1);
    CHECK(br[0].ram_index() == 4);
    CHECK(br[0].is_real());
    for (const auto& c : compose_along(br[0], f, 40)) CHECK(c.is_zero());
  }
  SUBCASE("irrational tangent slopes y^2 = 2 x^2 + x^3") {
    const auto br = puiseux_branches(curve("y^2 - 2*x^2 - x^3"), QuadNum(0), QuadNum(0));
    REQUIRE(br.size() == 2);
    for (const auto& b : br) {
      CHECK(b.is_real());
      CHECK(b.y_leading().d() == 2);
    }
  }
}

TEST_CASE("series satisfy the curve equation") {
  for (const char* s : {"y^2 - x^2*(x+1)", "y^2 - x^3", "y^2 - x^2*(x-1)", "y^3 - x^5", "x^4 + y^4 - x*y^2",
                        "y^2 - x*(x^2 + y^2)"}) {
    CAPTURE(s);
    const BiPoly f = parse_poly(s);
    const Curve c(f);
    for (const auto& b : puiseux_branches(c, QuadNum(0), QuadNum(0))) {
      const Series v = compose_along(b, f, 16 * b.ram_index());
      for (const auto& coef : v) CHECK(coef.is_zero());
    }
  }
}

TEST_CASE("sheet count along vertical lines") {
  // f monic in y with shear 0; the line x = a meets X_C in deg_y f places
  const char* curves[] = {"y^2 - x^2*(x+1)", "y^2 - x^3", "y^3 - x^5 - x*y", "y^4 - x^2*y^2 + x^5"};
  for (const char* s : curves) {
    const Curve c = curve(s);
    REQUIRE(c.shear() == 0);
    for (const Rational a : {Rational(0), Rational(1), Rational(-1)}) {
      const UniPoly fiber = c.f().at_x(a);
      const auto fac = factor_low_degree(fiber);
      if (fac.residual.degree() > 0) continue;
      std::vector<QuadNum> ys;
      for (const auto& r : fac.roots) ys.emplace_back(r);
      for (const auto& q : fac.quadratics) {
        const Rational disc = q[1] * q[1] - 4 * q[0];
        ys.push_back((QuadNum(-q[1]) + QuadNum::sqrt_of(disc)) / QuadNum(2));
        ys.push_back((QuadNum(-q[1]) - QuadNum::sqrt_of(disc)) / QuadNum(2));
      }
      int total = 0;
      for (const auto& b : ys)
        for (const auto& br : puiseux_branches(c, QuadNum(a), b)) total += br.ram_index() * br.multiplicity();
      CAPTURE(s);
      CAPTURE(to_string(a));
      CHECK(total == c.f().deg_y());
    }
  }
}

TEST_CASE("valuations add over products") {
  const Curve c = curve("y^2 - x^2*(x+1)");
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  const RatFuncOnCurve fs[] = {fn(c, "y", "x"), fn(c, "1", "x"), fn(c, "x + y", "1"), fn(c, "y - x", "x^2 + 1"),
                               fn(c, "x^2", "y")};
  for (const auto& b : br)
    for (const auto& r : fs)
      for (const auto& s : fs) {
        const auto vr = branch_valuation(b, r), vs = branch_valuation(b, s), vrs = branch_valuation(b, r * s);
        if (vr.infinite || vs.infinite) continue;
        CHECK(vrs.value == vr.value + vs.value);
      }
}

TEST_CASE("precision ceiling is reported") {
  const Curve c = curve("y^2 - x^2*(x+1)");
  const auto br = puiseux_branches(c, QuadNum(0), QuadNum(0));
  // y - x sqrt(1+x) vanishes to order 1 on one branch but to high order
  // against its own series truncation
  Truncation tight{2, 2};
  const BiPoly high = parse_poly("x^9");
  CHECK_THROWS_AS(branch_order(br[0], high, tight), PrecisionExhausted);
  CHECK(branch_order(br[0], high).value == 9);
}
