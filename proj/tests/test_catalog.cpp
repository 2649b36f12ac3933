#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "uqsl2/catalog.hpp"

using namespace uqsl2;
using testing_support::family_samples;
using testing_support::random_nonzero_scalar;

namespace {

Scalar q() { return Scalar::q(); }
PlanePoly term(const Scalar& c, std::uint32_t m, std::uint32_t n) { return PlanePoly::term(c, {m, n}); }
SeriesLabel label(const char* text) { return *SeriesLabel::parse(text); }

}  // namespace

TEST_CASE("build examples") {
  const Action eb = build(family::EB0{1});
  CHECK(eb.alpha() == q());
  CHECK(eb.beta() == Scalar::q_pow(-2));
  CHECK(eb.e_x().is_zero());
  CHECK(eb.e_y() == PlanePoly(1));
  CHECK(eb.f_x() == term(1, 1, 1));
  CHECK(eb.f_y() == term(-q(), 0, 2));

  const Action tr = build(family::Trivial{1, 1});
  CHECK(tr.alpha() == Scalar(1));
  CHECK(tr.beta() == Scalar(1));
  CHECK((tr.e_x().is_zero() && tr.e_y().is_zero() && tr.f_x().is_zero() && tr.f_y().is_zero()));

  const Action ea = build(family::EA0{1, 0, 0});
  CHECK(ea.f_x() == term(-q(), 2, 0));
  CHECK(ea.f_y() == term(-q(), 1, 1));
  CHECK(ea.e_x() == PlanePoly(1));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(build(family::EB0{0}), InvalidParameter);
  CHECK_THROWS_AS(build(family::Standard{0}), InvalidParameter);
  CHECK_THROWS_AS(build(family::Trivial{2, 1}), InvalidParameter);
  CHECK_NOTHROW(build(family::EA0{1, 0, 0}));
}

TEST_CASE("star patterns") {
  CHECK(star_pattern(build(family::EB0{1}), 0).str() == "0*/00");
  CHECK(star_pattern(build(family::EB0{1}), 1).str() == "00/00");
  CHECK(star_pattern(build(family::Standard{1}), 1).str() == "0*/*0");
  CHECK(star_pattern(build(family::Standard{1}), 1).is_antidiagonal());
  CHECK(star_pattern(build(family::Trivial{1, 1}), 0).is_zero());
  CHECK(label_of(build(family::FD0{1, 1, 1})).str() == "00/0*;00/00");
}

TEST_CASE("label text round trip") {
  for (unsigned b0 = 0; b0 < 16; ++b0)
    for (unsigned b1 = 0; b1 < 16; ++b1) {
      const SeriesLabel l{StarPattern::from_bits(b0), StarPattern::from_bits(b1)};
      CHECK(SeriesLabel::parse(l.str()) == l);
    }
  CHECK_FALSE(SeriesLabel::parse("0*/00").has_value());
  CHECK_FALSE(StarPattern::parse("0x/00").has_value());
}

TEST_CASE("classify_label examples") {
  using Kind = ClassificationOutcome::Kind;
  const auto eb = classify_label(label("0*/00;00/00"));
  CHECK(eb.kind == Kind::Nonempty);
  CHECK(eb.family == FamilyTag::EB0);
  CHECK(eb.forced == WeightExponents{1, -2});
  CHECK(classify_label(label("00/00;*0/00")).kind == Kind::Empty);
  const auto clash = classify_label(label("*0/00;00/0*"));
  CHECK(clash.kind == Kind::Empty);
  CHECK(clash.reason.find("clash") != std::string::npos);
  const auto triv = classify_label(label("00/00;00/00"));
  CHECK(triv.family == FamilyTag::Trivial);
  CHECK_FALSE(triv.forced.has_value());
  CHECK(classify_label(label("**/00;00/00")).kind == Kind::Excluded);
  CHECK(classify_label(label("00/00;*0/0*")).kind == Kind::Excluded);
}

TEST_CASE("forced weights per single star") {
  CHECK(forced_weights(StarPattern::single(Gen::E, Axis::X), 0).alpha_exp == -2);
  CHECK(forced_weights(StarPattern::single(Gen::E, Axis::X), 0).beta_exp == -1);
  CHECK(forced_weights(StarPattern::single(Gen::F, Axis::Y), 0).beta_exp == 2);
  CHECK(forced_weights(StarPattern::single(Gen::F, Axis::X), 0).alpha_exp == 2);
}

TEST_CASE("enumeration") {
  const auto s = enumerate_classification();
  CHECK(s.level0_candidates.size() == 5);
  CHECK(s.level1_candidates.size() == 6);
  CHECK(s.total == 30);
  CHECK(s.empty == 24);
  CHECK(s.nonempty.size() == 6);
  bool standard = false, trivial = false;
  for (const auto& e : s.nonempty) {
    if (e.label.str() == "00/00;0*/*0") standard = e.family == FamilyTag::Standard;
    if (e.label.str() == "00/00;00/00") trivial = e.family == FamilyTag::Trivial;
  }
  CHECK(standard);
  CHECK(trivial);
}

TEST_CASE("round trip through labels") {
  for (const auto& fam : family_samples()) {
    const Action a = build(fam);
    const auto out = classify_label(label_of(a));
    REQUIRE(out.kind == ClassificationOutcome::Kind::Nonempty);
    CHECK(out.family == tag_of(fam));
    if (out.forced) CHECK(out.forced->to_pair() == a.weights());
  }
}

TEST_CASE("invariant phi") {
  CHECK(invariant_phi(family::EA0{1, 1, 1}) == Scalar(1));
  CHECK(invariant_phi(family::EA0{2, 1, 4}) == Scalar(2));
  CHECK_FALSE(invariant_phi(family::EA0{1, 0, 1}).has_value());
  CHECK_FALSE(invariant_phi(family::EB0{1}).has_value());
  CHECK(invariant_phi(family::FD0{3, 1, 6}) == Scalar(2));
}

TEST_CASE("phi is invariant under conjugation") {
  for (int i = 0; i < 40; ++i) {
    const Scalar a0 = random_nonzero_scalar(2), s = random_nonzero_scalar(2), t = random_nonzero_scalar(2);
    const Scalar th = random_nonzero_scalar(2), om = random_nonzero_scalar(2);
    const family::EA0 moved{a0 / th, om * om * s, om.pow(4) * t / th};
    CHECK(conjugate(build(family::EA0{a0, s, t}), {th, om}) == build(moved));
    CHECK(invariant_phi(moved) == invariant_phi(family::EA0{a0, s, t}));
  }
}

TEST_CASE("isomorphism examples") {
  const auto st = are_isomorphic(family::Standard{Scalar::q_pow(2)}, family::Standard{1});
  CHECK(st.isomorphic);
  REQUIRE(st.certificate.has_value());
  CHECK(st.certificate->theta == Scalar(1));
  CHECK(st.certificate->omega == Scalar::q_pow(2));
  CHECK_FALSE(are_isomorphic(family::EA0{1, 1, 1}, family::EA0{1, 1, 2}).isomorphic);
  CHECK_FALSE(are_isomorphic(family::EB0{1}, family::FC0{1}).isomorphic);
  CHECK_FALSE(are_isomorphic(family::Trivial{1, 1}, family::Trivial{1, -1}).isomorphic);
  CHECK_FALSE(are_isomorphic(family::EA0{1, 0, 1}, family::EA0{1, 1, 1}).isomorphic);
  // phi agrees but omega^2 = 2 has no root in Q(q).
  const auto no_root = are_isomorphic(family::EA0{1, 1, 1}, family::EA0{1, 2, 4});
  CHECK(no_root.isomorphic);
  CHECK_FALSE(no_root.certificate.has_value());
  const auto fd = are_isomorphic(family::FD0{2, 1, 1}, family::FD0{1, Scalar::q_pow(2), Scalar::q_pow(4) / 2});
  CHECK(fd.isomorphic);
  CHECK(fd.certificate.has_value());
}

TEST_CASE("certificates conjugate f1 onto f2") {
  const std::vector<std::pair<SeriesFamily, SeriesFamily>> pairs = {
      {family::Standard{q() + 1}, family::Standard{Scalar(3)}},
      {family::EB0{q()}, family::EB0{Scalar(2)}},
      {family::FC0{Scalar::q_pow(-1)}, family::FC0{q() - 1}},
      {family::EA0{1, 0, 0}, family::EA0{q(), 0, 0}},
      {family::EA0{1, 0, 1}, family::EA0{1, 0, Scalar::q_pow(4)}},
      {family::EA0{1, q(), 0}, family::EA0{2, Scalar::q_pow(3), 0}},
      {family::FD0{1, 0, 1}, family::FD0{Scalar::q_pow(-1), 0, Scalar::q_pow(7)}},
  };
  for (const auto& [a, b] : pairs) {
    const auto v = are_isomorphic(a, b);
    CHECK(v.isomorphic);
    REQUIRE(v.certificate.has_value());
    CHECK(conjugate(build(a), *v.certificate) == build(b));
  }
}
