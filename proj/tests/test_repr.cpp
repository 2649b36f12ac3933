#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "uqsl2/repr.hpp"

using namespace uqsl2;
using testing_support::family_samples;

namespace {

Scalar q() { return Scalar::q(); }
Scalar qp(long k) { return Scalar::q_pow(k); }
const Scalar kBracket = (Scalar::q() - Scalar::q_pow(-1)).inverse();

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// Top-left square without the columns whose image was truncated.
void check_relations(const TruncatedModule& tm) {
  const std::size_t n = tm.dim();
  const Matrix kinv = [&] {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = tm.k(i, i).inverse();
    return m;
  }();
  const Matrix ke = tm.k * tm.e - qp(2) * (tm.e * tm.k);
  const Matrix kf = tm.k * tm.f - qp(-2) * (tm.f * tm.k);
  const Matrix comm = tm.e * tm.f - tm.f * tm.e - kBracket * (tm.k - kinv);
  for (std::size_t j = 0; j < n; ++j) {
    if (tm.leaks(Gen::E, j) || tm.leaks(Gen::F, j)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(ke(i, j).is_zero());
      CHECK(kf(i, j).is_zero());
      CHECK(comm(i, j).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("verma matrices") {
  const auto v = verma_matrices({qp(-3), Orientation::Highest, 4});
  CHECK(v.e(0, 1) == -(qp(2) + 1 + qp(-2)));
  CHECK(v.f(1, 0) == Scalar(1));
  CHECK(is_zero(v.e.column(0)));
  CHECK(v.k.is_diagonal());
  CHECK(v.k(2, 2) == qp(-7));
  const auto low = verma_matrices({qp(3), Orientation::Lowest, 4});
  CHECK(low.k(2, 2) == qp(7));
  CHECK(is_zero(low.f.column(0)));
  CHECK(low.e(1, 0) == Scalar(1));
  CHECK_THROWS_AS(verma_matrices({q(), Orientation::Highest, 0}), InvalidSize);
  CHECK_THROWS_AS(verma_matrices({0, Orientation::Highest, 3}), InvalidParameter);
}

TEST_CASE("verma relations hold on the computed square") {
  for (const Scalar& lam : {qp(-3), qp(2), Scalar(5), q() + 2})
    for (Orientation o : {Orientation::Highest, Orientation::Lowest}) check_relations(verma_matrices({lam, o, 8}));
}

TEST_CASE("slice examples") {
  const auto eb = slice(build(family::EB0{1}), BasisDescription::x_power_times_y_poly(2), 6);
  CHECK(eb.dim() == 7);
  CHECK(eb.labels[2] == "x^2*y^2");
  CHECK(is_zero(eb.f.column(2)));
  CHECK_FALSE(eb.leaks(Gen::F, 2));
  CHECK(eb.leaks(Gen::F, 6));

  const auto st = slice(build(family::Standard{1}), BasisDescription::homogeneous(1), 2);
  REQUIRE(st.dim() == 2);  // x, y
  CHECK(st.e(0, 1) == Scalar(1));
  CHECK(st.f(1, 0) == Scalar(1));
  CHECK(is_zero(st.e.column(0)));

  const auto tr = slice(build(family::Trivial{1, 1}), BasisDescription::single_monomial(3, 4), 1);
  CHECK(tr.dim() == 1);
  CHECK(tr.e.is_zero());
  CHECK(tr.f.is_zero());
  CHECK_FALSE(tr.escapes);
}

TEST_CASE("slice records escapes") {
  // EA0 with t != 0 sends x to a multiple of y^4, outside C[x].
  const Action a = build(family::EA0{1, 0, 1});
  CHECK(slice(a, BasisDescription::y_power_times_x_poly(0), 4).escapes);
  CHECK_FALSE(slice(a, BasisDescription::y_power_times_x_poly(0), 4, SliceMode::QuotientHigher).escapes);
}

TEST_CASE("slice matrices reproduce apply") {
  for (const auto& fam : family_samples()) {
    const Action a = build(fam);
    ActionEngine eng(a);
    for (const auto& desc : {BasisDescription::x_power_times_y_poly(2), BasisDescription::y_power_times_x_poly(1),
                             BasisDescription::homogeneous(3)}) {
      const auto tm = slice(a, desc, 5);
      if (tm.escapes) continue;
      CHECK(tm.k.is_diagonal());
      for (std::size_t j = 0; j < tm.dim(); ++j)
        for (Gen g : {Gen::E, Gen::F}) {
          if (tm.leaks(g, j)) continue;
          PlanePoly from_matrix;
          for (std::size_t i = 0; i < tm.dim(); ++i) from_matrix.add_term(tm.monomials[i], tm.matrix(g)(i, j));
          CHECK(from_matrix == eng.apply_monomial(g, tm.monomials[j]));
        }
    }
  }
}

TEST_CASE("EB0 slice entries match the closed forms") {
  const Action a = build(family::EB0{1});
  for (std::uint32_t n = 0; n <= 5; ++n) {
    const auto tm = slice(a, BasisDescription::x_power_times_y_poly(n), 6);
    for (std::uint32_t p = 0; p < 6; ++p) {
      const long ln = n, lp = p;
      if (p > 0) CHECK(tm.e(p - 1, p) == qp(1 - lp) * quantum_integer(lp));
      CHECK(tm.f(p + 1, p) == qp(-ln) * (qp(2 * ln) - qp(2 * lp)) * kBracket);
    }
  }
}

TEST_CASE("singular vectors") {
  const auto eb = slice(build(family::EB0{1}), BasisDescription::x_power_times_y_poly(2), 8);
  const auto sv = find_singular_vectors(eb, Orientation::Highest);
  REQUIRE(sv.size() == 2);
  CHECK(sv[0].text == "x^2");
  CHECK(sv[0].weight == qp(2));
  CHECK(sv[1].text == "x^2*y^3");
  CHECK(sv[1].weight == qp(-4));

  const auto vm = find_singular_vectors(verma_matrices({q() + 3, Orientation::Highest, 10}), Orientation::Highest);
  REQUIRE(vm.size() == 1);
  CHECK(vm[0].vector == unit(10, 0));

  const auto st = find_singular_vectors(slice(build(family::Standard{1}), BasisDescription::homogeneous(2), 3),
                                        Orientation::Highest);
  REQUIRE(st.size() == 1);
  CHECK(st[0].text == "x^2");
  CHECK(st[0].weight == qp(2));

  // A Verma module with weight q^2 is not simple: v_3 is singular.
  const auto red = find_singular_vectors(verma_matrices({qp(2), Orientation::Highest, 6}), Orientation::Highest);
  REQUIRE(red.size() == 2);
  CHECK(red[1].vector == unit(6, 3));
}

TEST_CASE("match_verma") {
  const Action eb = build(family::EB0{1});
  const auto v0 = slice(eb, BasisDescription::x_power_times_y_poly(0), 10);
  const std::vector<Vec> one{unit(v0.dim(), 0)};
  const auto m = match_verma(v0, one, {qp(-2), Orientation::Highest, 10});
  CHECK(m.isomorphic);

  const auto ea = slice(build(family::EA0{1, 0, 0}), BasisDescription::y_power_times_x_poly(1), 10);
  CHECK(match_verma(ea, std::nullopt, {qp(-1), Orientation::Highest, 10}).isomorphic);

  const auto ver = verma_matrices({q() + 1, Orientation::Highest, 6});
  const auto self = match_verma(ver, std::nullopt, {q() + 1, Orientation::Highest, 6});
  CHECK(self.isomorphic);
  for (const auto& c : self.scale) CHECK(c == Scalar(1));

  const auto wrong = match_verma(v0, one, {qp(-4), Orientation::Highest, 10});
  CHECK_FALSE(wrong.isomorphic);
  REQUIRE(wrong.mismatch.has_value());
  CHECK(wrong.mismatch->matrix == "k");

  CHECK_THROWS_AS(match_verma(v0, one, {qp(-2), Orientation::Highest, 11}), DimensionMismatch);
}

TEST_CASE("quotient rejects non-submodules") {
  const auto eb = slice(build(family::EB0{1}), BasisDescription::x_power_times_y_poly(1), 5);
  CHECK_THROWS_AS(quotient(eb, {unit(eb.dim(), 3)}), std::invalid_argument);
  CHECK(quotient(eb, {unit(eb.dim(), 0), unit(eb.dim(), 1)}).dim() == eb.dim() - 2);
}

TEST_CASE("non-split certificates") {
  const Action eb = build(family::EB0{1});
  const auto c0 = non_split_certificate(eb, 0, 8);
  CHECK(c0.statement() == "e(y) = 1");
  CHECK(c0.valid());
  const auto c1 = non_split_certificate(eb, 1, 8);
  CHECK(c1.target == Monomial{1, 0});
  CHECK_FALSE(c1.scalar.is_zero());
  CHECK(c1.valid());
  const auto f1 = non_split_certificate(build(family::FC0{1}), 1, 8);
  CHECK(f1.op == Gen::F);
  CHECK(f1.target == Monomial{0, 1});
  CHECK(f1.valid());
  for (std::uint32_t n = 0; n <= 3; ++n) CHECK(non_split_certificate(eb, n, 8).valid());
  CHECK_THROWS_AS(non_split_certificate(build(family::Standard{1}), 0, 8), InvalidParameter);
  CHECK_THROWS_AS(non_split_certificate(build(family::EA0{1, 0, 0}), 1, 8), InvalidParameter);
  CHECK_THROWS_AS(non_split_certificate(eb, 4, 8), std::invalid_argument);
}

TEST_CASE("composition reports") {
  const auto st = composition_report(family::Standard{1}, 8);
  CHECK(st.verified());
  REQUIRE(st.summands.size() == 9);
  for (std::size_t n = 0; n < st.summands.size(); ++n) {
    CHECK(st.summands[n].type == SummandType::Simple);
    CHECK(st.summands[n].dim == n + 1);
  }

  const auto eb = composition_report(family::EB0{1}, 8);
  CHECK(eb.verified());
  for (std::size_t n = 0; n < eb.summands.size(); ++n) {
    CHECK(eb.summands[n].type == SummandType::Series);
    CHECK(eb.summands[n].dim == n + 1);
    CHECK(eb.summands[n].quotient_weight == qp(-static_cast<long>(n) - 2));
  }

  const auto ea = composition_report(family::EA0{1, 1, 1}, 8);
  CHECK(ea.verified());
  CHECK(ea.summands[0].type == SummandType::Series);
  CHECK(ea.summands[0].quotient_weight == qp(-2));
  for (std::size_t n = 1; n < ea.summands.size(); ++n) {
    CHECK(ea.summands[n].type == SummandType::Verma);
    CHECK(ea.summands[n].weight == qp(-static_cast<long>(n)));
  }

  CHECK_THROWS_AS(composition_report(family::EB0{1}, 3), InvalidSize);
}

TEST_CASE("composition summands partition the truncation") {
  for (const SeriesFamily& f : {SeriesFamily(family::Trivial{-1, 1}), SeriesFamily(family::FC0{q()}),
                                SeriesFamily(family::FD0{2, 0, 0})}) {
    const auto r = composition_report(f, 5, 4);
    CHECK(r.partition_ok);
    CHECK(r.verified());
  }
}
