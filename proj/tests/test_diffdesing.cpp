#include "support.hpp"

#include "ore/diffdesing.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ore;
using namespace ore::test;

namespace {

// L applied to the polynomial f, differential action.
Poly apply(const OrePoly& l, Poly f) {
  Poly out;
  for (int i = 0; i <= l.order(); ++i) {
    out += l.coeff(i).num() * f;
    f = f.derivative();
  }
  return out;
}

int max_coeff_degree(const OrePoly& l) {
  int d = 0;
  for (const auto& c : l.coeffs()) d = std::max(d, c.num().degree());
  return d;
}

int nu(const OrePoly& l) {
  int v = 1 << 20;
  for (int i = 0; i <= l.order(); ++i)
    if (!l.coeff(i).is_zero()) v = std::min(v, l.coeff(i).num().valuation() - i);
  return v;
}

ClassicalOutcome expect_outcome(ClassicalResult r) {
  REQUIRE(std::holds_alternative<ClassicalOutcome>(r));
  return std::get<ClassicalOutcome>(std::move(r));
}

void check_outcome(const OrePoly& l, const ClassicalOutcome& o) {
  CHECK(o.result == primitive(o.result));
  CHECK(right_divide(o.result, l).rem.is_zero());
  CHECK(right_divide(o.result, o.aux).rem.is_zero());
  CHECK(o.result.poly_lc()(0) != 0);
  for (long e : o.missing) {
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
    c.back() = 1;
    CHECK(apply(o.aux, Poly(c)).is_zero());
  }
}

}  // namespace

TEST_CASE("indicial polynomial") {
  CHECK(indicial_at_zero(op(golden::exdiff_l, diff())) == P("x^2 - 3*x"));
  CHECK(indicial_at_zero(op(golden::intro_l, diff())) == P("x - 1"));
  CHECK(indicial_at_zero(op("x*D^2 + D", diff())) == P("x^2"));
  CHECK(indicial_at_zero(op(golden::ex53_l, diff())) == P("(x+1)*(x-2)*(x-5)"));
  CHECK_THROWS_AS(indicial_at_zero(op("S", shift())), std::invalid_argument);
}

TEST_CASE("exponents") {
  ExponentSet e = exponents(op(golden::exdiff_l, diff()));
  CHECK(e.candidates == std::vector<long>{0, 3});
  CHECK(e.admitted == std::vector<long>{0, 3});

  e = exponents(op("x*D^2 + D", diff()));
  CHECK(e.candidates == std::vector<long>{0});
  CHECK(e.admitted == std::vector<long>{0});

  e = exponents(op("D - 1", diff()));
  CHECK(e.admitted == std::vector<long>{0});

  e = exponents(op(golden::ex53_l, diff()));
  CHECK(e.candidates == std::vector<long>{2, 5});
  CHECK(e.admitted == std::vector<long>{2, 5});

  // x D^2 - D: indicial s (s - 2); the exponent 0 solution is 1 and exponent 2 is x^2.
  e = exponents(op("x*D^2 - D", diff()));
  CHECK(e.admitted == std::vector<long>{0, 2});

  // x^2 D^2 - x D + 1 - x: indicial (s - 1)^2 and only a logarithmic second solution.
  e = exponents(op("x^2*D^2 - x*D + 1 - x", diff()));
  CHECK(e.admitted == std::vector<long>{1});
}

TEST_CASE("series prefixes of the classical example") {
  const OrePoly l = op(golden::exdiff_l, diff());
  const auto s0 = series_solution(l, 0, 6);
  REQUIRE(s0.has_value());
  CHECK(*s0 == std::vector<Rational>{1, 1, Rational(1, 2), 0, Rational(-1, 8), Rational(-19, 120),
                                     Rational(-119, 720)});
  const auto s3 = series_solution(l, 3, 6);
  REQUIRE(s3.has_value());
  CHECK(*s3 == std::vector<Rational>{0, 0, 0, 1, 1, 1, 1});
  CHECK(series_solution(op("x*D^2 + D", diff()), 0, 4) == std::vector<Rational>{1, 0, 0, 0, 0});
  CHECK_FALSE(series_solution(l, 1, 6).has_value());
  CHECK_THROWS_AS(series_solution(l, 4, 2), std::invalid_argument);
}

TEST_CASE("logarithmic obstruction") {
  // Indicial roots 1 and 2; the exponent-1 recurrence is inconsistent at index 2.
  const OrePoly l = op("x^2*D^2 - 2*x*D + 2 - x", diff());
  CHECK_FALSE(series_solution(l, 1, 6).has_value());
  const ExponentSet e = exponents(l);
  CHECK(e.candidates == std::vector<long>{1, 2});
  CHECK(e.admitted == std::vector<long>{2});
  CHECK(std::holds_alternative<NotDesingularizable>(classical_desingularize(l)));
}

TEST_CASE("exponent invariants") {
  const std::vector<const char*> ops{golden::exdiff_l, golden::intro_l, golden::ex53_l, golden::ex32_l,
                                     "x*D^2 + D", "x*D^2 - D", "x^2*D^2 - x*D + 1 - x", "x^3*D^2 + D + 5", "x^2*D^2 - 2*x*D + 2 - x"};
  for (const char* text : ops) {
    CAPTURE(text);
    const OrePoly l = op(text, diff());
    const ExponentSet e = exponents(l);
    CHECK(e.admitted.size() <= static_cast<std::size_t>(l.order()));
    CHECK(std::is_sorted(e.admitted.begin(), e.admitted.end()));
    CHECK(std::includes(e.candidates.begin(), e.candidates.end(), e.admitted.begin(), e.admitted.end()));
    for (long a : e.admitted) {
      CHECK(e.indicial(Rational(a)) == 0);
      const auto s = series_solution(l, a, e.truncation_order);
      REQUIRE(s.has_value());
      const Poly residual = apply(l, Poly(*s));
      const int through = std::min(e.truncation_order - max_coeff_degree(l), e.truncation_order + nu(l));
      CHECK((residual.is_zero() || residual.valuation() > through));
    }
  }
}

TEST_CASE("classical desingularization") {
  SUBCASE("classical example") {
    const OrePoly l = op(golden::exdiff_l, diff());
    const ClassicalOutcome o = expect_outcome(classical_desingularize(l));
    CHECK(o.missing == std::vector<long>{1, 2});
    CHECK(o.aux == op(golden::exdiff_a, diff()));
    CHECK(o.result == op(golden::exdiff_m, diff()));
    check_outcome(l, o);
  }
  SUBCASE("introductory operator") {
    const OrePoly l = op(golden::intro_l, diff());
    const ClassicalOutcome o = expect_outcome(classical_desingularize(l));
    CHECK(o.missing == std::vector<long>{0});
    CHECK(o.aux == op("x*D", diff()));
    CHECK(same_up_to_constant(o.result, op(golden::intro_m, diff())));
    check_outcome(l, o);
  }
  SUBCASE("x D^2 - D needs the missing exponent 1") {
    const OrePoly l = op("x*D^2 - D", diff());
    const ClassicalOutcome o = expect_outcome(classical_desingularize(l));
    CHECK(o.missing == std::vector<long>{1});
    CHECK(o.result == op("D^3", diff()));
    check_outcome(l, o);
  }
  SUBCASE("not desingularizable") {
    for (const char* text : {"x*D^2 + D", golden::ex53_l, "x*D + 1"}) {
      CAPTURE(text);
      const ClassicalResult r = classical_desingularize(op(text, diff()));
      CHECK(std::holds_alternative<NotDesingularizable>(r));
    }
  }
  SUBCASE("no singularity at 0") {
    const OrePoly l = op("(x - 1)*D + 3", diff());
    const ClassicalOutcome o = expect_outcome(classical_desingularize(l));
    CHECK(o.result == l);
    CHECK(o.aux == op("1", diff()));
    CHECK(o.missing.empty());
  }
  CHECK_THROWS_AS(classical_desingularize(op("S", shift())), std::invalid_argument);
}

TEST_CASE("translate") {
  CHECK(translate(op("x*D - 1", diff()), 0) == op("x*D - 1", diff()));
  CHECK(translate(op("(x-1)*D", diff()), 1) == op("x*D", diff()));
  CHECK_THROWS_AS(translate(op("S", shift()), 1), std::invalid_argument);
  Random rnd(51);
  for (int i = 0; i < 30; ++i) {
    const OrePoly a = rnd.ore(diff(), 0, 3, 3), b = rnd.ore(diff(), 0, 3, 3);
    const Rational xi = rnd.rational(-20, 20, 5);
    CHECK(translate(translate(a, xi), -xi) == a);
    CHECK(translate(a * b, xi) == translate(a, xi) * translate(b, xi));
  }
}

TEST_CASE("desingularization at another point") {
  // The introductory operator moved so that its removable singularity sits at 1.
  const OrePoly intro = op(golden::intro_l, diff());
  const OrePoly l = translate(intro, -1);
  CHECK(multiplicity(P("x - 1"), l.poly_lc()) == 1);
  const ClassicalResult r = classical_desingularize_at(l, 1);
  const ClassicalOutcome o = expect_outcome(r);
  CHECK(o.result.poly_lc()(1) != 0);
  CHECK(right_divide(o.result, l).rem.is_zero());
  const ClassicalOutcome at0 = expect_outcome(classical_desingularize(intro));
  CHECK(same_up_to_constant(o.result, translate(at0.result, -1)));
  // The other singularity of the moved operator (at 2) is not removable.
  CHECK(std::holds_alternative<NotDesingularizable>(classical_desingularize_at(l, 2)));
}
