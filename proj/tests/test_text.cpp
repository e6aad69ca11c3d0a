#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace ore;
using namespace ore::test;

namespace {

std::size_t error_position(const std::string& text, const AlgebraRef& alg) {
  try {
    parse_operator(text, alg);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

OrePoly machine_round_trip(const OrePoly& l) {
  std::ostringstream os;
  write_machine_operator(os, "L", l);
  std::istringstream is(os.str());
  return read_machine_operator(read_machine(is), "L", l.algebra());
}

struct Golden {
  const char* text;
  AlgebraRef alg;
};

std::vector<Golden> goldens() {
  return {{golden::intro_l, diff()},   {golden::intro_m, diff()},   {golden::exdiff_l, diff()},
          {golden::exdiff_a, diff()},  {golden::exdiff_m, diff()},  {golden::ex51_a, diff()},
          {golden::ex51_m, diff()},    {golden::ex32_l, diff()},    {golden::ex32_p, diff()},
          {golden::ex32_pl, diff()},   {golden::ex33_l, shift()},   {golden::ex33_p, shift()},
          {golden::ex33_pl, shift()},  {golden::ex52_l, shift()},   {golden::ex53_l, diff()},
          {golden::ex54_l, shift()},   {golden::ex54_m, shift()},   {golden::ex55_l, squaring()},
          {golden::ex55_m, squaring()}};
}

}  // namespace

TEST_CASE("parsing") {
  const OrePoly intro = op(golden::intro_l, diff());
  CHECK(intro.coeff(1) == RatFunc(P("x - x^2")));
  CHECK(intro.coeff(0) == RatFunc(-1));
  CHECK(op("D*x", diff()) == op("x*D + 1", diff()));
  CHECK(op("D*x", diff()) != op("x*D", diff()));
  const OrePoly s = op("(x+1)*S^2 - S", shift());
  REQUIRE(s.order() == 2);
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(1) == RatFunc(-1));
  CHECK(s.coeff(2) == RatFunc(P("x + 1")));
  CHECK(op("x^3", diff()) == op("x*x*x", diff()));
  CHECK(op("(D + 1)^2", diff()) == op("D^2 + 2*D + 1", diff()));
  // '/' multiplies by the inverse on the right: D * (1/x) = (1/x) D - 1/x^2.
  CHECK(op("D/x", diff()) == OrePoly(diff(), {RatFunc(Poly(-1), P("x^2")), RatFunc(Poly(1), P("x"))}));
  CHECK(op("x/D^0 - 3/x^2", diff()) == OrePoly::scalar(diff(), RatFunc(P("x^3 - 3"), P("x^2"))));
  CHECK(op(" - - 2 ", diff()) == op("2", diff()));
  const AlgebraRef q = OreAlgebra::custom(P("x^2"), P("1-x"), "Q");
  CHECK(op("Q*x", q) == op("x^2*Q + 1 - x", q));
}

TEST_CASE("generator symbols") {
  CHECK_THROWS_AS(op("D", shift()), ParseError);
  CHECK_THROWS_AS(op("S", diff()), ParseError);
  const AlgebraRef dx = OreAlgebra::differential("Dx");
  CHECK(op("Dx*x", dx) == OrePoly(dx, {RatFunc(1), RatFunc(Poly::x())}));
  CHECK_THROWS_AS(op("D", dx), ParseError);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_position("x*(1-x", diff()) == 6);
  CHECK(error_position("D", shift()) == 0);
  CHECK(error_position("x + y", diff()) == 4);
  CHECK(error_position("D/D", diff()) == 2);
  CHECK(error_position("1/0", diff()) == 2);
  CHECK(error_position("", diff()) == 0);
  CHECK(error_position("x^", diff()) == 2);
  CHECK(error_position("2 x", diff()) == 2);
  CHECK(error_position("x + ", diff()) == 4);
  CHECK(error_position("(x))", diff()) == 3);
  CHECK(error_position("x # 1", diff()) == 2);
}

TEST_CASE("parse_poly") {
  CHECK(parse_poly("(x+1)^2") == Poly(std::vector<Rational>{1, 2, 1}));
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly("D"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/x"), ParseError);
}

TEST_CASE("algebra descriptors") {
  CHECK(make_algebra(parse_algebra_descriptor("diff"))->same_as(*diff()));
  CHECK(make_algebra(parse_algebra_descriptor("shift"))->generator() == "S");
  const AlgebraDescriptor d = parse_algebra_descriptor("custom:sigma=x^2,delta=1-x");
  CHECK(d.sigma_text == "x^2");
  CHECK(d.delta_text == "1-x");
  const AlgebraRef c = make_algebra(d);
  CHECK(c->same_as(*squaring()));
  CHECK(c->generator() == "P");
  CHECK(make_algebra(parse_algebra_descriptor("custom:sigma=2*x,generator=Q"))->generator() == "Q");
  CHECK(make_algebra(parse_algebra_descriptor("custom:sigma=2*x"))->delta_is_zero());
  CHECK_THROWS_AS(parse_algebra_descriptor("foo"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra_descriptor("custom"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra_descriptor("custom:delta=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra_descriptor("custom:sigma=x,tau=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra_descriptor("diff:sigma=x"), std::invalid_argument);
  CHECK_THROWS_AS(make_algebra(parse_algebra_descriptor("custom:sigma=3")), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(print_operator(OrePoly(diff())) == "0");
  CHECK(print_operator(op(golden::intro_m, diff())) == "(x - 1)*D^2 + (2)*D");
  CHECK(print_operator(op(golden::intro_m, diff()), false) == "(-x + 1)*D^2 + (-2)*D");
  CHECK(print_operator(op("D^2 + x", diff())) == "D^2 + (x)");
  CHECK(print_operator(op(golden::exdiff_m, diff())) ==
        "(x^5 - 2*x^4 + 4*x^3 - 9*x^2 + 12*x - 6)*D^4 + (-x^5 + 2*x^4 - x^3 + 12*x^2 - 24*x + 24)*D^3"
        " + (-3*x^3 - 9*x^2)*D^2 + (6*x^2 + 18*x)*D + (-6*x - 18)");
  CHECK(print_operator(op("(1/(2*x))*D", diff()), false) == "((1/2)/(x))*D");
  CHECK(print_operator(op("6*x*S - 4", shift())) == "(3*x)*S + (-2)");
}

TEST_CASE("round trip on goldens") {
  for (const auto& g : goldens()) {
    CAPTURE(g.text);
    const OrePoly l = op(g.text, g.alg);
    CHECK(op(print_operator(l, false), g.alg) == l);
    const OrePoly canon = primitive(l);
    CHECK(op(print_operator(canon), g.alg) == canon);
    CHECK(print_operator(op(print_operator(l), g.alg)) == print_operator(l));
    CHECK(machine_round_trip(l) == l);
  }
}

TEST_CASE("round trip on random operators") {
  for (const AlgebraRef& alg : {diff(), shift(), squaring()}) {
    Random rnd(61);
    for (int i = 0; i < 200; ++i) {
      OrePoly l = rnd.ore(alg, 0, 4, 4);
      if (i % 3 == 0) l = RatFunc(rnd.poly_upto(2), rnd.poly_upto(3)) * l;
      if (i % 5 == 0) l = RatFunc(rnd.rational(-50, 50, 50)) * l;
      CHECK(op(print_operator(l, false), alg) == l);
      CHECK(op(print_operator(l), alg) == primitive(l));
      CHECK(machine_round_trip(l) == l);
    }
  }
}

TEST_CASE("machine format") {
  std::ostringstream os;
  write_machine_operator(os, "M", op("(1/2)*x*D^2 - (1/(x+1))*D + 3", diff()));
  CHECK(os.str() == "M.order=2\nM.c0=3\nM.c1=-1 | 1 1\nM.c2=0 1/2\n");
  std::ostringstream zero;
  write_machine_operator(zero, "Z", OrePoly(diff()));
  CHECK(zero.str() == "Z.order=-1\n");
  CHECK(machine_round_trip(OrePoly(diff())).is_zero());
  std::istringstream bad("L.order=1\nL.c0=1\n");
  CHECK_THROWS_AS(read_machine_operator(read_machine(bad), "L", diff()), std::invalid_argument);
  std::istringstream garbage("no equals sign\n");
  CHECK_THROWS_AS(read_machine(garbage), std::invalid_argument);
}
