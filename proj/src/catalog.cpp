#include "uqsl2/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace uqsl2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t cell_index(Gen g, Axis v) {
  return (g == Gen::F ? 2 : 0) + (v == Axis::Y ? 1 : 0);
}

constexpr Gen kCellGen[4] = {Gen::E, Gen::E, Gen::F, Gen::F};
constexpr Axis kCellAxis[4] = {Axis::X, Axis::Y, Axis::X, Axis::Y};

PlanePoly mono(const Scalar& c, std::uint32_t mx, std::uint32_t ny) {
  return PlanePoly::term(c, {mx, ny});
}

void require_nonzero(const Scalar& s, const char* what) {
  if (s.is_zero()) throw InvalidParameter(std::string(what) + " must be nonzero");
}

}  // namespace

FamilyTag tag_of(const SeriesFamily& f) { return static_cast<FamilyTag>(f.index()); }

const char* tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::Trivial: return "Trivial";
    case FamilyTag::Standard: return "Standard";
    case FamilyTag::EB0: return "EB0";
    case FamilyTag::FC0: return "FC0";
    case FamilyTag::EA0: return "EA0";
    case FamilyTag::FD0: return "FD0";
  }
  return "?";
}

std::optional<FamilyTag> parse_tag(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (FamilyTag t : {FamilyTag::Trivial, FamilyTag::Standard, FamilyTag::EB0, FamilyTag::FC0,
                      FamilyTag::EA0, FamilyTag::FD0}) {
    std::string n(tag_name(t));
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (n == lower) return t;
  }
  return std::nullopt;
}

void validate(const SeriesFamily& f) {
  std::visit(overloaded{
                 [](const family::Trivial& v) {
                   if (std::abs(v.sign_x) != 1 || std::abs(v.sign_y) != 1)
                     throw InvalidParameter("Trivial signs must be +1 or -1");
                 },
                 [](const family::Standard& v) { require_nonzero(v.tau, "tau"); },
                 [](const family::EB0& v) { require_nonzero(v.b0, "b0"); },
                 [](const family::FC0& v) { require_nonzero(v.c0, "c0"); },
                 [](const family::EA0& v) { require_nonzero(v.a0, "a0"); },
                 [](const family::FD0& v) { require_nonzero(v.d0, "d0"); },
             },
             f);
}

Action build(const SeriesFamily& f) {
  validate(f);
  const Scalar q = Scalar::q();
  return std::visit(
      overloaded{
          [](const family::Trivial& v) {
            return Action({v.sign_x, v.sign_y}, {}, {}, {}, {});
          },
          [](const family::Standard& v) {
            return Action({Scalar::q_pow(1), Scalar::q_pow(-1)}, {}, mono(v.tau, 1, 0),
                          mono(v.tau.inverse(), 0, 1), {});
          },
          [&](const family::EB0& v) {
            const Scalar inv = v.b0.inverse();
            return Action({Scalar::q_pow(1), Scalar::q_pow(-2)}, {}, mono(v.b0, 0, 0),
                          mono(inv, 1, 1), mono(-q * inv, 0, 2));
          },
          [&](const family::FC0& v) {
            const Scalar inv = v.c0.inverse();
            return Action({Scalar::q_pow(2), Scalar::q_pow(-1)}, mono(-q * inv, 2, 0),
                          mono(inv, 1, 1), mono(v.c0, 0, 0), {});
          },
          [&](const family::EA0& v) {
            const Scalar inv = v.a0.inverse();
            return Action({Scalar::q_pow(-2), Scalar::q_pow(-1)}, mono(v.a0, 0, 0), {},
                          mono(-q * inv, 2, 0) + mono(v.t, 0, 4),
                          mono(-q * inv, 1, 1) + mono(v.s, 0, 3));
          },
          [&](const family::FD0& v) {
            const Scalar inv = v.d0.inverse();
            return Action({Scalar::q_pow(1), Scalar::q_pow(2)},
                          mono(-q * inv, 1, 1) + mono(v.s, 3, 0),
                          mono(-q * inv, 0, 2) + mono(v.t, 4, 0), {}, mono(v.d0, 0, 0));
          },
      },
      f);
}

std::optional<Scalar> invariant_phi(const SeriesFamily& f) {
  if (const auto* v = std::get_if<family::EA0>(&f)) {
    if (v->s.is_zero() || v->t.is_zero() || v->a0.is_zero()) return std::nullopt;
    return v->t / (v->a0 * v->s * v->s);
  }
  if (const auto* v = std::get_if<family::FD0>(&f)) {
    if (v->s.is_zero() || v->t.is_zero() || v->d0.is_zero()) return std::nullopt;
    return v->t / (v->d0 * v->s * v->s);
  }
  return std::nullopt;
}

// --- star patterns -------------------------------------------------------------

StarPattern StarPattern::single(Gen g, Axis v) {
  StarPattern p;
  p.cells[cell_index(g, v)] = true;
  return p;
}

StarPattern StarPattern::from_bits(unsigned bits) {
  StarPattern p;
  for (std::size_t i = 0; i < 4; ++i) p.cells[i] = ((bits >> i) & 1U) != 0;
  return p;
}

bool StarPattern::at(Gen g, Axis v) const { return cells[cell_index(g, v)]; }

int StarPattern::stars() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), true));
}

std::string StarPattern::str() const {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == 2) s += '/';
    s += cells[i] ? '*' : '0';
  }
  return s;
}

std::optional<StarPattern> StarPattern::parse(const std::string& text) {
  if (text.size() != 5 || text[2] != '/') return std::nullopt;
  StarPattern p;
  const std::size_t pos[4] = {0, 1, 3, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    char c = text[pos[i]];
    if (c == '*') p.cells[i] = true;
    else if (c != '0') return std::nullopt;
  }
  return p;
}

std::string SeriesLabel::str() const { return level0.str() + ";" + level1.str(); }

std::optional<SeriesLabel> SeriesLabel::parse(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) return std::nullopt;
  auto a = StarPattern::parse(text.substr(0, semi));
  auto b = StarPattern::parse(text.substr(semi + 1));
  if (!a || !b) return std::nullopt;
  return SeriesLabel{*a, *b};
}

StarPattern star_pattern(const Action& action, unsigned level) {
  StarPattern p;
  for (std::size_t i = 0; i < 4; ++i)
    p.cells[i] = !homogeneous_component(action.entry(kCellGen[i], kCellAxis[i]), level).is_zero();
  return p;
}

SeriesLabel label_of(const Action& action) { return {star_pattern(action, 0), star_pattern(action, 1)}; }

WeightPair WeightExponents::to_pair() const {
  return {Scalar::q_pow(alpha_exp), Scalar::q_pow(beta_exp)};
}

// Each star gives two equations on (alpha, beta) as powers of q.
//  * The plane relation projected one degree up: a star in the x column forces
//    beta = q^-1, a star in the y column forces alpha = q.
//  * Weight matching: e shifts weights by q^2 and f by q^-2. At level 0 the
//    entry is a constant (weight 1); at level 1 it is the other generator
//    (the only degree-1 monomial of the right weight).
PatternWeights forced_weights(const StarPattern& pattern, unsigned level) {
  PatternWeights w;
  auto impose = [&w](std::optional<long>& slot, long value) {
    if (slot && *slot != value) w.consistent = false;
    slot = value;
  };
  for (std::size_t i = 0; i < 4; ++i) {
    if (!pattern.cells[i]) continue;
    const long shift = kCellGen[i] == Gen::E ? 2 : -2;
    if (kCellAxis[i] == Axis::X) {
      impose(w.beta_exp, -1);
      impose(w.alpha_exp, level == 0 ? -shift : -1 - shift);
    } else {
      impose(w.alpha_exp, 1);
      impose(w.beta_exp, level == 0 ? -shift : 1 - shift);
    }
  }
  return w;
}

namespace {

std::string weights_text(const PatternWeights& w) {
  return "alpha=q^" + std::to_string(*w.alpha_exp) + ", beta=q^" + std::to_string(*w.beta_exp);
}

}  // namespace

ClassificationOutcome classify_label(const SeriesLabel& label) {
  using Kind = ClassificationOutcome::Kind;
  const PatternWeights w0 = forced_weights(label.level0, 0);
  const PatternWeights w1 = forced_weights(label.level1, 1);
  if (!w0.consistent)
    return {Kind::Excluded, "level-0 pattern " + label.level0.str() + " forces contradictory weights",
            std::nullopt, std::nullopt};
  if (!w1.consistent)
    return {Kind::Excluded, "level-1 pattern " + label.level1.str() + " forces contradictory weights",
            std::nullopt, std::nullopt};

  if (!label.level0.is_zero() && !label.level1.is_zero()) {
    if (w0.alpha_exp != w1.alpha_exp || w0.beta_exp != w1.beta_exp)
      return {Kind::Empty,
              "weight clash: level 0 forces " + weights_text(w0) + ", level 1 forces " + weights_text(w1),
              std::nullopt, std::nullopt};
    throw std::logic_error("unexpected compatible nonzero label " + label.str());
  }

  if (label.level0.is_zero()) {
    if (label.level1.is_zero())
      return {Kind::Nonempty, "e and f raise degree; k has weights +-1", FamilyTag::Trivial,
              std::nullopt};
    if (label.level1.is_antidiagonal())
      return {Kind::Nonempty, "", FamilyTag::Standard,
              WeightExponents{*w1.alpha_exp, *w1.beta_exp}};
    return {Kind::Empty,
            "degree argument: with a zero level-0 pattern e and f never lower degree, so "
            "(ef - fe) has zero degree-1 component while (k - kinv)/(q - q^-1) does not",
            std::nullopt, std::nullopt};
  }

  // Single star at level 0, zero at level 1.
  FamilyTag tag = FamilyTag::EA0;
  if (label.level0.at(Gen::E, Axis::Y)) tag = FamilyTag::EB0;
  else if (label.level0.at(Gen::F, Axis::X)) tag = FamilyTag::FC0;
  else if (label.level0.at(Gen::F, Axis::Y)) tag = FamilyTag::FD0;
  return {Kind::Nonempty, "", tag, WeightExponents{*w0.alpha_exp, *w0.beta_exp}};
}

ClassificationSummary enumerate_classification() {
  ClassificationSummary s;
  for (unsigned bits = 0; bits < 16; ++bits) {
    StarPattern p = StarPattern::from_bits(bits);
    if (forced_weights(p, 0).consistent) s.level0_candidates.push_back(p);
    if (forced_weights(p, 1).consistent) s.level1_candidates.push_back(p);
  }
  for (const auto& p0 : s.level0_candidates)
    for (const auto& p1 : s.level1_candidates) {
      SeriesLabel label{p0, p1};
      ClassificationOutcome out = classify_label(label);
      ++s.total;
      if (out.kind == ClassificationOutcome::Kind::Nonempty) {
        s.nonempty.push_back({label, *out.family, out.forced});
      } else {
        ++s.empty;
        s.empty_labels.emplace_back(label, out.reason);
      }
    }
  return s;
}

// --- isomorphism ---------------------------------------------------------------

namespace {

IsoVerdict certified(const SeriesFamily& f1, const SeriesFamily& f2, std::optional<DiagonalAutomorphism> aut,
                     std::string reason) {
  IsoVerdict v{true, std::nullopt, std::move(reason)};
  if (!aut) v.reason += "; certificate omitted (no root in Q(q))";
  else if (conjugate(build(f1), *aut) == build(f2)) v.certificate = aut;
  else throw std::logic_error(std::string("isomorphism certificate failed for ") + tag_name(tag_of(f1)));
  return v;
}

std::optional<Scalar> fourth_root(const Scalar& s) {
  auto r = s.sqrt();
  if (!r) return std::nullopt;
  if (auto w = r->sqrt()) return w;
  return (-*r).sqrt();
}

// Shared logic for EA0 and FD0. `lead` is a0 (resp. d0); the automorphism
// rescales (lead, s, t) as (lead/u, w^2 s, w^4 t/u), where (u, w) is
// (theta, omega) for EA0 and (omega, theta) for FD0.
IsoVerdict three_parameter(const SeriesFamily& f1, const SeriesFamily& f2, const Scalar& lead1,
                           const Scalar& s1, const Scalar& t1, const Scalar& lead2, const Scalar& s2,
                           const Scalar& t2, bool swap_roles) {
  if (s1.is_zero() != s2.is_zero() || t1.is_zero() != t2.is_zero())
    return {false, std::nullopt, "zero pattern of (s, t) differs"};
  if (!s1.is_zero() && !t1.is_zero()) {
    if (*invariant_phi(f1) != *invariant_phi(f2))
      return {false, std::nullopt, "invariant phi differs"};
  }
  const Scalar u = lead1 / lead2;
  std::optional<Scalar> w;
  if (s1.is_zero() && t1.is_zero()) w = Scalar(1);
  else if (!s1.is_zero()) w = (s2 / s1).sqrt();
  else w = fourth_root(t2 * u / t1);
  std::optional<DiagonalAutomorphism> aut;
  if (w) aut = swap_roles ? DiagonalAutomorphism(*w, u) : DiagonalAutomorphism(u, *w);
  std::string reason = s1.is_zero() || t1.is_zero() ? "same (s, t) zero pattern" : "equal invariant phi";
  return certified(f1, f2, aut, reason);
}

}  // namespace

IsoVerdict are_isomorphic(const SeriesFamily& f1, const SeriesFamily& f2) {
  validate(f1);
  validate(f2);
  if (f1.index() != f2.index())
    return {false, std::nullopt, "different series have different k-actions"};
  switch (tag_of(f1)) {
    case FamilyTag::Trivial: {
      if (f1 != f2) return {false, std::nullopt, "different k-action signs"};
      return {true, DiagonalAutomorphism::identity(), "identical sign pair"};
    }
    case FamilyTag::Standard: {
      const auto& a = std::get<family::Standard>(f1);
      const auto& b = std::get<family::Standard>(f2);
      return certified(f1, f2, DiagonalAutomorphism(1, a.tau / b.tau), "one isomorphism class");
    }
    case FamilyTag::EB0: {
      const auto& a = std::get<family::EB0>(f1);
      const auto& b = std::get<family::EB0>(f2);
      return certified(f1, f2, DiagonalAutomorphism(1, a.b0 / b.b0), "one isomorphism class");
    }
    case FamilyTag::FC0: {
      const auto& a = std::get<family::FC0>(f1);
      const auto& b = std::get<family::FC0>(f2);
      return certified(f1, f2, DiagonalAutomorphism(a.c0 / b.c0, 1), "one isomorphism class");
    }
    case FamilyTag::EA0: {
      const auto& a = std::get<family::EA0>(f1);
      const auto& b = std::get<family::EA0>(f2);
      return three_parameter(f1, f2, a.a0, a.s, a.t, b.a0, b.s, b.t, false);
    }
    case FamilyTag::FD0: {
      const auto& a = std::get<family::FD0>(f1);
      const auto& b = std::get<family::FD0>(f2);
      return three_parameter(f1, f2, a.d0, a.s, a.t, b.d0, b.s, b.t, true);
    }
  }
  return {false, std::nullopt, "unknown series"};
}

}  // namespace uqsl2
