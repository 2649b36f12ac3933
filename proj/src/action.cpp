#include "uqsl2/action.hpp"

#include <sstream>

namespace uqsl2 {

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::K: return "k";
    case Gen::Kinv: return "kinv";
    case Gen::E: return "e";
    case Gen::F: return "f";
  }
  return "?";
}

WeightPair::WeightPair(Scalar a, Scalar b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.is_zero() || beta.is_zero()) throw InvalidParameter("weights must be nonzero");
}

DiagonalAutomorphism::DiagonalAutomorphism(Scalar t, Scalar w)
    : theta(std::move(t)), omega(std::move(w)) {
  if (theta.is_zero() || omega.is_zero())
    throw InvalidParameter("automorphism scalars must be nonzero");
}

PlanePoly DiagonalAutomorphism::operator()(const PlanePoly& p) const {
  PlanePoly r;
  for (const auto& [m, c] : p.terms())
    r.add_term(m, c * theta.pow(m.x) * omega.pow(m.y));
  return r;
}

DiagonalAutomorphism DiagonalAutomorphism::after(const DiagonalAutomorphism& first) const {
  return {theta * first.theta, omega * first.omega};
}

// --- Action ------------------------------------------------------------------

Action::Action(WeightPair weights, PlanePoly e_x, PlanePoly e_y, PlanePoly f_x, PlanePoly f_y)
    : weights_(std::move(weights)),
      e_x_(std::move(e_x)),
      e_y_(std::move(e_y)),
      f_x_(std::move(f_x)),
      f_y_(std::move(f_y)) {
  for (const PlanePoly* p : {&e_x_, &e_y_, &f_x_, &f_y_}) {
    if (p->is_zero()) continue;
    if (!weight_of(*p, *this)) throw InvalidParameter("action entry " + p->str() + " is not a weight vector");
  }
}

const PlanePoly& Action::entry(Gen g, Axis v) const {
  if (g == Gen::E) return v == Axis::X ? e_x_ : e_y_;
  if (g == Gen::F) return v == Axis::X ? f_x_ : f_y_;
  throw std::invalid_argument("only e and f have stored entries");
}

Action Action::with_entry(Gen g, Axis v, PlanePoly value) const {
  PlanePoly ex = e_x_, ey = e_y_, fx = f_x_, fy = f_y_;
  if (g == Gen::E) (v == Axis::X ? ex : ey) = std::move(value);
  else if (g == Gen::F) (v == Axis::X ? fx : fy) = std::move(value);
  else throw std::invalid_argument("only e and f have stored entries");
  return {weights_, ex, ey, fx, fy};
}

Action Action::with_weights(WeightPair w) const { return {std::move(w), e_x_, e_y_, f_x_, f_y_}; }

Scalar Action::monomial_weight(const Monomial& m) const {
  return weights_.alpha.pow(m.x) * weights_.beta.pow(m.y);
}

// --- AlgebraElement ----------------------------------------------------------

AlgebraElement::AlgebraElement(const Scalar& c) { add({}, c); }

AlgebraElement::AlgebraElement(Gen g) { add({g}, 1); }

AlgebraElement AlgebraElement::word(Word w, const Scalar& c) {
  AlgebraElement a;
  a.add(w, c);
  return a;
}

void AlgebraElement::add(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r(a);
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r(a);
  for (const auto& [w, c] : b.terms_) r.add(w, -c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w(wa);
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, v] : a.terms_) r.add(w, c * v);
  return r;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (Gen g : w) os << "*" << gen_name(g);
  }
  return os.str();
}

// --- ActionEngine ------------------------------------------------------------

ActionEngine::ActionEngine(Action action) : action_(std::move(action)) {}

const PlanePoly& ActionEngine::apply_monomial(Gen g, const Monomial& m) {
  auto key = std::make_pair(g, std::make_pair(m.x, m.y));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  PlanePoly value = compute_monomial(g, m);
  return memo_.emplace(key, std::move(value)).first->second;
}

PlanePoly ActionEngine::compute_monomial(Gen g, const Monomial& m) {
  switch (g) {
    case Gen::K: return PlanePoly::term(action_.monomial_weight(m), m);
    case Gen::Kinv: return PlanePoly::term(action_.monomial_weight(m).inverse(), m);
    case Gen::E:
    case Gen::F: break;
  }
  if (m.degree() == 0) return {};  // e(1) = f(1) = 0
  if (m.degree() == 1) return action_.entry(g, m.x == 1 ? Axis::X : Axis::Y);
  // Peel one letter from the left: x^m y^n = x * x^(m-1) y^n, or y * y^(n-1).
  const bool peel_x = m.x > 0;
  const PlanePoly letter = peel_x ? PlanePoly::x() : PlanePoly::y();
  const Monomial rest = peel_x ? Monomial{m.x - 1, m.y} : Monomial{0, m.y - 1};
  return leibniz(g, letter, PlanePoly::monomial(rest.x, rest.y));
}

PlanePoly ActionEngine::apply(Gen g, const PlanePoly& p) {
  PlanePoly r;
  for (const auto& [m, c] : p.terms()) r += c * apply_monomial(g, m);
  return r;
}

PlanePoly ActionEngine::apply(const Word& w, const PlanePoly& p) {
  PlanePoly r = p;
  for (auto it = w.rbegin(); it != w.rend() && !r.is_zero(); ++it) r = apply(*it, r);
  return r;
}

PlanePoly ActionEngine::apply(const AlgebraElement& elt, const PlanePoly& p) {
  PlanePoly r;
  for (const auto& [w, c] : elt.terms()) r += c * apply(w, p);
  return r;
}

PlanePoly ActionEngine::leibniz(Gen g, const PlanePoly& u, const PlanePoly& v) {
  switch (g) {
    case Gen::K: return apply(Gen::K, u) * apply(Gen::K, v);
    case Gen::Kinv: return apply(Gen::Kinv, u) * apply(Gen::Kinv, v);
    case Gen::E: return u * apply(Gen::E, v) + apply(Gen::E, u) * apply(Gen::K, v);
    case Gen::F: return apply(Gen::F, u) * v + apply(Gen::Kinv, u) * apply(Gen::F, v);
  }
  return {};
}

PlanePoly apply(const AlgebraElement& elt, const PlanePoly& p, const Action& action) {
  ActionEngine engine(action);
  return engine.apply(elt, p);
}

// --- axioms ------------------------------------------------------------------

const std::vector<NamedRelation>& algebra_relations() {
  static const std::vector<NamedRelation> relations = [] {
    const AlgebraElement k(Gen::K), kinv(Gen::Kinv), e(Gen::E), f(Gen::F);
    const Scalar q = Scalar::q();
    const Scalar bracket = q - q.inverse();
    return std::vector<NamedRelation>{
        {"k*kinv = 1", k * kinv - AlgebraElement(1)},
        {"kinv*k = 1", kinv * k - AlgebraElement(1)},
        {"k*e = q^2*e*k", k * e - Scalar::q_pow(2) * (e * k)},
        {"k*f = q^-2*f*k", k * f - Scalar::q_pow(-2) * (f * k)},
        {"e*f - f*e = (k - kinv)/(q - q^-1)", e * f - f * e - bracket.inverse() * (k - kinv)},
    };
  }();
  return relations;
}

namespace {

std::vector<Monomial> monomials_up_to(std::uint32_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d)
    for (std::uint32_t i = 0; i <= d; ++i) out.push_back({d - i, i});
  return out;
}

constexpr Gen kAllGens[] = {Gen::K, Gen::Kinv, Gen::E, Gen::F};

}  // namespace

AxiomReport check_module_algebra(const Action& action, std::uint32_t max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  ActionEngine engine(action);
  AxiomReport report;
  report.max_degree = max_degree;
  auto record = [&](std::string check, std::string rel, Monomial m, std::optional<Monomial> right,
                    PlanePoly residual) {
    ++report.checks;
    if (residual.is_zero()) return;
    report.passed = false;
    report.failures.push_back({std::move(check), std::move(rel), m, right, std::move(residual)});
  };

  // Unit axiom: pi(h)(1) = eps(h) 1.
  const PlanePoly one(1);
  record("unit", "k(1) = 1", {}, std::nullopt, engine.apply(Gen::K, one) - one);
  record("unit", "kinv(1) = 1", {}, std::nullopt, engine.apply(Gen::Kinv, one) - one);
  record("unit", "e(1) = 0", {}, std::nullopt, engine.apply(Gen::E, one));
  record("unit", "f(1) = 0", {}, std::nullopt, engine.apply(Gen::F, one));

  const auto basis = monomials_up_to(max_degree);
  for (const auto& m : basis) {
    const PlanePoly p = PlanePoly::monomial(m.x, m.y);
    for (const auto& rel : algebra_relations())
      record("relation", rel.name, m, std::nullopt, engine.apply(rel.element, p));
  }

  // The plane relation yx - qxy must be sent to zero by the coproduct rule.
  const PlanePoly x = PlanePoly::x(), y = PlanePoly::y();
  const Scalar q = Scalar::q();
  for (Gen g : kAllGens)
    record("plane_relation", std::string(gen_name(g)) + "(yx - q*xy)", {1, 1}, std::nullopt,
           engine.leibniz(g, y, x) - q * engine.leibniz(g, x, y));

  // Split consistency: the recursion fixes one bracketing, so compare every
  // other factorisation against it.
  for (const auto& u : basis)
    for (const auto& v : basis) {
      if (u.degree() + v.degree() > max_degree) continue;
      auto [twist, uv] = multiply_monomials(u, v);
      const PlanePoly pu = PlanePoly::monomial(u.x, u.y);
      const PlanePoly pv = PlanePoly::monomial(v.x, v.y);
      for (Gen g : kAllGens)
        record("split", gen_name(g), u, v,
               twist * engine.apply_monomial(g, uv) - engine.leibniz(g, pu, pv));
    }
  return report;
}

std::optional<Scalar> weight_of(const PlanePoly& p, const Action& action) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::optional<Scalar> w;
  for (const auto& [m, c] : p.terms()) {
    Scalar wm = action.monomial_weight(m);
    if (!w) w = wm;
    else if (*w != wm) return std::nullopt;
  }
  return w;
}

Action conjugate(const Action& action, const DiagonalAutomorphism& aut) {
  const Scalar ti = aut.theta.inverse();
  const Scalar wi = aut.omega.inverse();
  return {action.weights(), ti * aut(action.e_x()), wi * aut(action.e_y()),
          ti * aut(action.f_x()), wi * aut(action.f_y())};
}

}  // namespace uqsl2
