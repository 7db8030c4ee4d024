#include "doctest.h"
#include "realcurve/parser.hpp"
#include "realcurve/ratfunc.hpp"
#include "realcurve/solve.hpp"

using namespace realcurve;

namespace {

Curve curve(const char* f) { return Curve(parse_poly(f)); }
RatFuncOnCurve fn(const Curve& c, const char* p, const char* q) { return parse_ratfunc(p, q, c); }

const char* kNode = "y^2 - x^2*(x+1)";
const char* kCusp = "y^2 - x^3";
const char* kCubic = "y^2 - x^2*(x-1)";
const char* kC2 = "y^2 - (x^2+1)^2*x";
const char* kCircle = "x^2 + y^2 - 1";

}  // namespace

TEST_CASE("characteristic polynomials") {
  const Curve node = curve(kNode);
  const CharacteristicPoly m = characteristic_poly(node, fn(node, "y", "x"));
  CHECK(to_string(m) == "T^2 - (x + 1)");
  CHECK(m.integral());
  CHECK(m.poly_coeff(1).is_zero());
  CHECK(m.poly_coeff(0) == parse_poly("-(x + 1)"));

  const Curve cusp = curve(kCusp);
  CHECK(to_string(characteristic_poly(cusp, fn(cusp, "y", "x"))) == "T^2 - x");

  const Curve c2 = curve(kC2);
  CHECK(to_string(characteristic_poly(c2, fn(c2, "y", "1 + x^2"))) == "T^2 - x");

  const Curve circle = curve(kCircle);
  const CharacteristicPoly lin = characteristic_poly(circle, fn(circle, "1", "2 + x"));
  CHECK_FALSE(lin.integral());
  CHECK(to_string(lin) == "T^2 - 2/(x + 2)*T + 1/(x^2 + 4*x + 4)");
}

TEST_CASE("integrality over Pol(X)") {
  const Curve node = curve(kNode);
  const auto v = is_integral_over_pol(node, fn(node, "y", "x"));
  CHECK(v.status == Tri::True);
  CHECK(v.witness == "T^2 - (x + 1)");

  const Curve c2 = curve(kC2);
  CHECK(is_integral_over_pol(c2, fn(c2, "y", "1 + x^2")).status == Tri::True);

  const Curve circle = curve(kCircle);
  const auto no = is_integral_over_pol(circle, fn(circle, "1", "2 + x"));
  CHECK(no.status == Tri::False);
  CHECK_FALSE(no.certificate.empty());
}

TEST_CASE("regularity on X") {
  const Curve circle = curve(kCircle);
  const auto yes = regularity_on_x(circle, fn(circle, "1", "2 + x"));
  REQUIRE(yes.status == Tri::True);
  REQUIRE(yes.representation);
  CHECK(yes.representation->second == parse_poly("x + 2"));

  const Curve cubic = curve(kCubic);
  const auto no = regularity_on_x(cubic, fn(cubic, "x^2", "x^2 + y^2"));
  CHECK(no.status == Tri::False);
  CHECK(no.certificate.find("valuation -1") != std::string::npos);

  const Curve c2 = curve(kC2);
  const auto c2yes = regularity_on_x(c2, fn(c2, "y", "1 + x^2"));
  REQUIRE(c2yes.status == Tri::True);
  CHECK(c2yes.representation->second == parse_poly("x^2 + 1"));

  const Curve node = curve(kNode);
  CHECK(regularity_on_x(node, fn(node, "y", "x")).status == Tri::False);
}

TEST_CASE("regularity search finds a better denominator") {
  // y^2/x^2 = x + 1 on the node
  const Curve node = curve(kNode);
  const RatFuncOnCurve r = fn(node, "y^2", "x^2");
  const auto v = regularity_on_x(node, r);
  REQUIRE(v.status == Tri::True);
  REQUIRE(v.representation);
  const auto& [p1, q1] = *v.representation;
  CHECK(count_real_solutions(node.f(), q1) == 0);
  CHECK(node.vanishes_on(q1 * r.numerator() - p1 * r.denominator()));
}

TEST_CASE("regularity gap is Unknown, never No") {
  // y/x on the cusp is continuous and integral but not in the local ring
  const Curve cusp = curve(kCusp);
  const auto v = regularity_on_x(cusp, fn(cusp, "y", "x"), FunctionOptions{4, default_truncation()});
  CHECK(v.status == Tri::Unknown);
  CHECK(v.bound_used == "degree bound D=4");
}

TEST_CASE("membership in O(X') and the integral closure of O(X)") {
  const Curve cubic = curve(kCubic);
  CHECK(is_in_o_xprime(cubic, fn(cubic, "1", "x")).status == Tri::True);
  CHECK(is_in_o_x_closure(cubic, fn(cubic, "1", "x")).status == Tri::False);

  const Curve node = curve(kNode);
  CHECK(is_in_o_xprime(node, fn(node, "1", "x")).status == Tri::False);
  CHECK(is_in_o_x_closure(node, fn(node, "y", "x")).status == Tri::True);

  const Curve cusp = curve(kCusp);
  CHECK(is_in_o_xprime(cusp, fn(cusp, "y", "x")).status == Tri::True);

  const Curve c2 = curve(kC2);
  CHECK(is_in_o_x_closure(c2, fn(c2, "y", "1 + x^2")).status == Tri::True);
}

TEST_CASE("membership in Pol(X^b)") {
  const Curve c2 = curve(kC2);
  CHECK(is_in_pol_xb(c2, fn(c2, "y", "1 + x^2")).status == Tri::True);
  const Curve node = curve(kNode);
  CHECK(is_in_pol_xb(node, fn(node, "y", "x")).status == Tri::False);
  const Curve circle = curve(kCircle);
  CHECK(is_in_pol_xb(circle, fn(circle, "1", "2 + x")).status == Tri::False);
}

TEST_CASE("continuous extension to the central locus") {
  const Curve node = curve(kNode);
  const ContinuityResult n = extends_continuously_to_cent(node, fn(node, "y", "x"));
  CHECK(n.verdict.status == Tri::False);
  REQUIRE(n.limits.size() == 1);
  CHECK(n.limits[0].values == std::vector<std::string>{"-1", "1"});

  const Curve cusp = curve(kCusp);
  const ContinuityResult c = extends_continuously_to_cent(cusp, fn(cusp, "y", "x"));
  CHECK(c.verdict.status == Tri::True);
  REQUIRE(c.limits.size() == 1);
  CHECK(c.limits[0].values == std::vector<std::string>{"0"});

  const Curve cubic = curve(kCubic);
  const ContinuityResult i = extends_continuously_to_cent(cubic, fn(cubic, "1", "x"));
  CHECK(i.verdict.status == Tri::True);
  CHECK(i.limits.empty());
}

TEST_CASE("integral dependence relations") {
  const Curve node = curve(kNode);
  CHECK(verify_integral_dependence(node, fn(node, "y", "x"), {fn(node, "-(x+1)", "1"), fn(node, "0", "1")}) ==
        Tri::True);
  const Curve cusp = curve(kCusp);
  CHECK(verify_integral_dependence(cusp, fn(cusp, "y", "x"), {fn(cusp, "-x", "1"), fn(cusp, "0", "1")}) ==
        Tri::True);
  const Curve cubic = curve(kCubic);
  CHECK(verify_integral_dependence(cubic, fn(cubic, "1", "x"), {fn(cubic, "-1", "x")}) == Tri::True);

  // wrong relation
  CHECK(verify_integral_dependence(cusp, fn(cusp, "y", "x"), {fn(cusp, "-x - 1", "1"), fn(cusp, "0", "1")}) ==
        Tri::False);
  // right relation, but 1/x does not extend continuously over the cusp
  CHECK(verify_integral_dependence(cusp, fn(cusp, "1", "x"), {fn(cusp, "-1", "x")}) == Tri::False);
}

TEST_CASE("function report on the node") {
  const Curve node = curve(kNode);
  const FunctionReport r = analyze_function(node, fn(node, "y", "x"));
  CHECK(r.integral.status == Tri::True);
  CHECK(r.regular.status == Tri::False);
  CHECK(r.in_o_xprime.status == Tri::True);
  CHECK(r.in_o_x_closure.status == Tri::True);
  CHECK(r.sr_cent.status == Tri::False);
  CHECK(r.in_pol_xb.status == Tri::False);
  CHECK_FALSE(r.has_unknown());
}
