#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "uqsl2/expr.hpp"

using namespace uqsl2;

namespace {

PlanePoly eval(const std::string& s, const Action* a = nullptr) { return evaluate(*parse_expression(s), a); }

}  // namespace

TEST_CASE("parse shapes") {
  const auto e = parse_expression("e(f(x))");
  CHECK(e->kind == ExprKind::Apply);
  CHECK(e->gen == Gen::E);
  CHECK(e->lhs->kind == ExprKind::Apply);
  CHECK(e->lhs->gen == Gen::F);
  CHECK(e->lhs->lhs->kind == ExprKind::X);

  const auto p = parse_expression("x*y^2");
  CHECK(p->kind == ExprKind::Mul);
  CHECK(p->rhs->kind == ExprKind::Pow);
  CHECK(p->rhs->exponent == 2);

  CHECK(parse_expression("kinv(y)")->gen == Gen::Kinv);
  CHECK(parse_expression("  1 - 2 - 3 ")->lhs->kind == ExprKind::Sub);
}

TEST_CASE("evaluation") {
  CHECK(eval("y*x - q*x*y").is_zero());
  CHECK(eval("(x + y)^2") == PlanePoly::monomial(2, 0) + PlanePoly::term(1 + Scalar::q(), {1, 1}) +
                                 PlanePoly::monomial(0, 2));
  CHECK(eval("x/(q+1)") == PlanePoly::term((Scalar::q() + 1).inverse(), {1, 0}));
  CHECK(eval("q^-2*x") == PlanePoly::term(Scalar::q_pow(-2), {1, 0}));
  CHECK(eval("0*x").is_zero());

  const Action eb = build(family::EB0{1});
  CHECK(eval("e(y)", &eb) == PlanePoly(1));
  CHECK(eval("f(x)", &eb) == PlanePoly::monomial(1, 1));
  CHECK(eval("e(e(x*y^2))", &eb) == PlanePoly::term((1 + Scalar::q_pow(2)) * Scalar::q_pow(-2), {1, 0}));
  CHECK(eval("k(kinv(x*y))", &eb) == PlanePoly::monomial(1, 1));
  CHECK_THROWS_AS(eval("e(x)"), EvalError);
  CHECK_THROWS_AS(eval("x/y"), EvalError);
  CHECK_THROWS_AS(eval("x/(q-q)"), DivisionByZero);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_expression("x^-1"), NonIntegerExponent);
  CHECK_THROWS_AS(parse_expression("x^1.5"), NonIntegerExponent);
  CHECK_THROWS_AS(parse_expression("x^y"), NonIntegerExponent);
  try {
    parse_expression("x + * y");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(parse_expression("e(x"), SyntaxError);
  CHECK_THROWS_AS(parse_expression(""), SyntaxError);
  CHECK_THROWS_AS(parse_expression("z"), SyntaxError);
  CHECK_THROWS_AS(parse_expression("x)"), SyntaxError);
}

TEST_CASE("scalars") {
  CHECK(parse_scalar("(1+3*q^2)/(q-2)") == Scalar(QPoly(std::vector<mpq_class>{1, 0, 3}), QPoly(std::vector<mpq_class>{-2, 1})));
  CHECK(parse_scalar("-1/2") == Scalar(mpq_class(-1, 2)));
  CHECK_THROWS(parse_scalar("x"));
}

TEST_CASE("render round trip") {
  for (const char* s : {"e(f(x))", "x*y^2 - q*y", "-(x + y)^3", "(1 - q)/(2 + q)*x", "q^-3*kinv(y*x)",
                        "x - (y - x)", "x*(y*x)", "-x^2", "(-x)^2", "2^3", "e(x + y) + f(1)"}) {
    const auto e = parse_expression(s);
    const std::string r = render(*e);
    CHECK_MESSAGE(*parse_expression(r) == *e, s << " -> " << r);
  }
}

TEST_CASE("polynomial text reparses to the same polynomial") {
  for (int i = 0; i < 60; ++i) {
    const PlanePoly p = testing_support::random_plane(5, 4);
    CHECK_MESSAGE(eval(p.str()) == p, p.str());
  }
}
