#include <random>
#include <string>

#include "doctest.h"
#include "realcurve/error.hpp"
#include "realcurve/parser.hpp"

using namespace realcurve;

namespace {

BiPoly::Monomials mons(std::initializer_list<std::pair<std::pair<int, int>, Rational>> l) {
  BiPoly::Monomials m;
  for (const auto& [k, v] : l) m[k] = v;
  return m;
}

// Random expression text over the grammar, including unary minus,
// parentheses, powers and p/q literals.
std::string random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 2);
  std::uniform_int_distribution<int> small(1, 9);
  switch (pick(rng)) {
    case 0:
      return "x";
    case 1:
      return "y";
    case 2:
      return rng() % 3 == 0 ? std::to_string(small(rng)) + "/" + std::to_string(small(rng))
                            : std::to_string(small(rng));
    case 3:
      return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 4:
      return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 5:
      return "(" + random_expr(rng, depth - 1) + ")*(" + random_expr(rng, depth - 1) + ")";
    case 6:
      return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(small(rng) % 3 + 1);
    default:
      return "-(" + random_expr(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse_poly("y^2 - x^2*(x-1)").monomials() == mons({{{0, 2}, 1}, {{3, 0}, -1}, {{2, 0}, 1}}));
  CHECK(parse_poly("x^2 + y^2 - 1").monomials() == mons({{{2, 0}, 1}, {{0, 2}, 1}, {{0, 0}, -1}}));
  CHECK(parse_poly("y^2 - (x^2+1)^2*x").monomials() ==
        mons({{{0, 2}, 1}, {{5, 0}, -1}, {{3, 0}, -2}, {{1, 0}, -1}}));
  CHECK(parse_poly("3/6*x").monomials() == mons({{{1, 0}, Rational(1, 2)}}));
  CHECK(parse_poly("--x") == BiPoly::x());
  CHECK(parse_poly("-x^2") == -(BiPoly::x() * BiPoly::x()));
  CHECK(parse_poly("  x *\ty ") == BiPoly::x() * BiPoly::y());
  CHECK(parse_poly("0").is_zero());
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](const char* s) -> long {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(pos_of("2x") == 1);
  CHECK(pos_of("x + z") == 4);
  CHECK(pos_of("(x + 1") == 6);
  CHECK(pos_of("x^") == 2);
  CHECK(pos_of("x / 2") == 2);
  CHECK(pos_of("") == 0);
  CHECK(pos_of("1/0") == 0);
  CHECK(pos_of("x y") == 2);
  CHECK_THROWS_WITH_AS(parse_poly("x + zz"), doctest::Contains("unknown variable 'zz'"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 100; ++i) {
    const std::string src = random_expr(rng, 4);
    const BiPoly p = parse_poly(src);
    CAPTURE(src);
    const BiPoly q = parse_poly(to_string(p));
    CHECK(q.monomials() == p.monomials());
    CHECK(to_string(q) == to_string(p));
  }
}

TEST_CASE("parsing respects ring operations") {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    const std::string a = random_expr(rng, 3), b = random_expr(rng, 3);
    CHECK(parse_poly(a) + parse_poly(b) == parse_poly("(" + a + ")+(" + b + ")"));
    CHECK(parse_poly(a) * parse_poly(b) == parse_poly("(" + a + ")*(" + b + ")"));
  }
}

TEST_CASE("rational functions on a curve") {
  const Curve node(parse_poly("y^2 - x^2*(x+1)"));
  const RatFuncOnCurve r = parse_ratfunc("y", "x", node);
  CHECK(r.numerator() == BiPoly::y());
  const Curve circle(parse_poly("x^2 + y^2 - 1"));
  CHECK_NOTHROW(parse_ratfunc("1", "x", circle));
  const Curve cubic(parse_poly("y^2 - x^2*(x-1)"));
  CHECK_THROWS_AS(parse_ratfunc("1", "y^2-x^2*(x-1)", cubic), NotInFunctionField);
  CHECK_THROWS_AS(parse_ratfunc("1", "0", cubic), NotInFunctionField);
  // common factors cancel and the denominator is normalized
  const RatFuncOnCurve s = parse_ratfunc("2*x*y", "-4*x^2", cubic);
  CHECK(s.denominator() == BiPoly::x());
  CHECK(s.numerator() == BiPoly::y() * Rational(-1, 2));
  // x^2/(x^2+y^2) equals 1/x on the cubic
  CHECK(equal_in_function_field(parse_ratfunc("x^2", "x^2+y^2", cubic), parse_ratfunc("1", "x", cubic)));
  CHECK(!equal_in_function_field(parse_ratfunc("y", "x", cubic), parse_ratfunc("1", "x", cubic)));
  // on a reducible curve a denominator may vanish on no single component
  const Curve axes(parse_poly("x*y"), {parse_poly("x"), parse_poly("y")});
  CHECK_THROWS_AS(parse_ratfunc("1", "x", axes), NotInFunctionField);
  CHECK_NOTHROW(parse_ratfunc("1", "x + y", axes));
}
