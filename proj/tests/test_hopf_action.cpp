#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "uqsl2/action.hpp"
#include "uqsl2/catalog.hpp"

using namespace uqsl2;
using testing_support::family_samples;
using testing_support::random_nonzero_scalar;
using testing_support::uniform;

namespace {

Scalar q() { return Scalar::q(); }
PlanePoly mono(std::uint32_t m, std::uint32_t n) { return PlanePoly::monomial(m, n); }
Action eb0() { return build(family::EB0{1}); }

bool has_failure_on(const AxiomReport& r, Monomial m) {
  for (const auto& f : r.failures)
    if (f.monomial == m && !f.residual.is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("apply examples on EB0") {
  const AlgebraElement e(Gen::E), f(Gen::F), k(Gen::K), kinv(Gen::Kinv);
  CHECK(apply(e, PlanePoly::y(), eb0()) == PlanePoly(1));
  CHECK(apply(e, mono(0, 2), eb0()) == (1 + Scalar::q_pow(-2)) * PlanePoly::y());
  const AlgebraElement rel = e * f - f * e - (q() - Scalar::q_pow(-1)).inverse() * (k - kinv);
  CHECK(apply(rel, PlanePoly::y(), eb0()).is_zero());
}

TEST_CASE("words act right to left") {
  ActionEngine eng(eb0());
  const PlanePoly p = mono(1, 2);
  CHECK(eng.apply(Word{Gen::E, Gen::F}, p) == eng.apply(Gen::E, eng.apply(Gen::F, p)));
  CHECK(eng.apply(Word{}, p) == p);
  CHECK(eng.apply(AlgebraElement(Scalar(1)), p) == p);
}

TEST_CASE("unit axiom") {
  for (const auto& fam : family_samples()) {
    ActionEngine eng(build(fam));
    CHECK(eng.apply(Gen::K, PlanePoly(1)) == PlanePoly(1));
    CHECK(eng.apply(Gen::E, PlanePoly(1)).is_zero());
    CHECK(eng.apply(Gen::F, PlanePoly(1)).is_zero());
  }
}

TEST_CASE("check_module_algebra examples") {
  CHECK(check_module_algebra(eb0(), 8).passed);
  CHECK(check_module_algebra(build(family::Standard{1}), 8).passed);
  const Action bad = eb0().with_entry(Gen::F, Axis::Y, PlanePoly::term(q(), {0, 2}));
  const auto r = check_module_algebra(bad, 4);
  CHECK_FALSE(r.passed);
  CHECK(has_failure_on(r, {0, 1}));
  CHECK_THROWS_AS(check_module_algebra(eb0(), 1), std::invalid_argument);
}

TEST_CASE("trivial sign variants all pass") {
  for (int sx : {1, -1})
    for (int sy : {1, -1}) CHECK(check_module_algebra(build(family::Trivial{sx, sy}), 6).passed);
}

TEST_CASE("EB0 closed forms") {
  ActionEngine eng(eb0());
  const Scalar bracket = (q() - Scalar::q_pow(-1)).inverse();
  for (std::uint32_t n = 0; n <= 6; ++n)
    for (std::uint32_t p = 0; p <= 6; ++p) {
      const long ln = n, lp = p;
      const PlanePoly e_expect =
          p == 0 ? PlanePoly() : PlanePoly::term(Scalar::q_pow(1 - lp) * quantum_integer(lp), {n, p - 1});
      const PlanePoly f_expect = PlanePoly::term(
          Scalar::q_pow(-ln) * (Scalar::q_pow(2 * ln) - Scalar::q_pow(2 * lp)) * bracket, {n, p + 1});
      CHECK(eng.apply(Gen::E, mono(n, p)) == e_expect);
      CHECK(eng.apply(Gen::F, mono(n, p)) == f_expect);
    }
}

TEST_CASE("EA0 closed forms with s = t = 0") {
  // e(x^p y^n) = q^(1-n-p) [p] x^(p-1) y^n,  f(x^p y^n) = -q^(n+p) [n+p] x^(p+1) y^n
  ActionEngine eng(build(family::EA0{1, 0, 0}));
  for (std::uint32_t p = 0; p <= 6; ++p)
    for (std::uint32_t n = 0; n <= 6; ++n) {
      const long lp = p, ln = n;
      const PlanePoly e_expect =
          p == 0 ? PlanePoly() : PlanePoly::term(Scalar::q_pow(1 - ln - lp) * quantum_integer(lp), {p - 1, n});
      const PlanePoly f_expect = PlanePoly::term(-Scalar::q_pow(ln + lp) * quantum_integer(ln + lp), {p + 1, n});
      CHECK(eng.apply(Gen::E, mono(p, n)) == e_expect);
      CHECK(eng.apply(Gen::F, mono(p, n)) == f_expect);
    }
}

TEST_CASE("weight_of") {
  CHECK(weight_of(mono(2, 1), eb0()) == Scalar(1));
  const Action st = build(family::Standard{1});
  CHECK_FALSE(weight_of(PlanePoly::x() + PlanePoly::y(), st).has_value());
  CHECK(weight_of(PlanePoly(1), st) == Scalar(1));
  CHECK_THROWS_AS(weight_of(PlanePoly(), st), ZeroPolynomial);
}

TEST_CASE("action invariants") {
  CHECK_THROWS_AS(WeightPair(0, 1), InvalidParameter);
  CHECK_THROWS_AS(DiagonalAutomorphism(1, 0), InvalidParameter);
  const WeightPair w(q(), Scalar::q_pow(-1));
  CHECK_THROWS_AS(Action(w, PlanePoly::x() + PlanePoly::y(), {}, {}, {}), InvalidParameter);
}

TEST_CASE("conjugate examples") {
  const Scalar tau = Scalar::q_pow(3) + 2;
  CHECK(conjugate(build(family::Standard{tau}), {1, tau}) == build(family::Standard{1}));
  const Scalar a0 = 2, s = q(), t = Scalar(5), th = q() + 1, om = Scalar(3);
  CHECK(conjugate(build(family::EA0{a0, s, t}), {th, om}) ==
        build(family::EA0{th.inverse() * a0, om * om * s, th.inverse() * om.pow(4) * t}));
  for (const auto& fam : family_samples()) CHECK(conjugate(build(fam), DiagonalAutomorphism::identity()) == build(fam));
}

TEST_CASE("conjugation is a group action and keeps weights") {
  for (const auto& fam : family_samples()) {
    const Action a = build(fam);
    const DiagonalAutomorphism p1(random_nonzero_scalar(2), random_nonzero_scalar(2));
    const DiagonalAutomorphism p2(random_nonzero_scalar(2), random_nonzero_scalar(2));
    const Action twice = conjugate(conjugate(a, p1), p2);
    CHECK(twice == conjugate(a, p2.after(p1)));
    CHECK(twice.weights() == a.weights());
  }
}

TEST_CASE("Leibniz is independent of bracketing") {
  for (const auto& fam : family_samples()) {
    ActionEngine eng(build(fam));
    for (int i = 0; i < 8; ++i) {
      auto rand_mono = [] {
        const auto d = static_cast<std::uint32_t>(uniform(0, 2));
        const auto a = static_cast<std::uint32_t>(uniform(0, d));
        return mono(a, d - a);
      };
      const PlanePoly u = rand_mono(), v = rand_mono(), w = rand_mono();
      for (Gen g : {Gen::K, Gen::E, Gen::F}) {
        // g((uv)w) against g(u(vw)), both expanded through the coproduct.
        CHECK(eng.leibniz(g, u * v, w) == eng.leibniz(g, u, v * w));
        CHECK(eng.apply(g, u * v * w) == eng.leibniz(g, u, v * w));
      }
    }
  }
}

TEST_CASE("weight covariance") {
  for (const auto& fam : family_samples()) {
    const Action a = build(fam);
    ActionEngine eng(a);
    for (std::uint32_t d = 0; d <= 4; ++d)
      for (std::uint32_t i = 0; i <= d; ++i) {
        const PlanePoly p = mono(d - i, i);
        const Scalar w = *weight_of(p, a);
        const PlanePoly ep = eng.apply(Gen::E, p), fp = eng.apply(Gen::F, p);
        if (!ep.is_zero()) CHECK(weight_of(ep, a) == Scalar::q_pow(2) * w);
        if (!fp.is_zero()) CHECK(weight_of(fp, a) == Scalar::q_pow(-2) * w);
      }
  }
}

TEST_CASE("homogeneous components of entries are monomials") {
  for (const auto& fam : family_samples()) {
    const Action a = build(fam);
    for (const PlanePoly* p : {&a.e_x(), &a.e_y(), &a.f_x(), &a.f_y()})
      for (std::uint32_t d = 0; d <= 5; ++d) CHECK(homogeneous_component(*p, d).terms().size() <= 1);
  }
}

TEST_CASE("relations hold for every family sample") {
  for (const auto& fam : family_samples()) {
    const auto r = check_module_algebra(build(fam), 6);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}
