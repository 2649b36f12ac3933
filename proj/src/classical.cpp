#include "uqsl2/classical.hpp"

#include <sstream>
#include <stdexcept>

namespace uqsl2 {

CommPoly CommPoly::term(const mpq_class& c, std::uint32_t mx, std::uint32_t ny) {
  CommPoly p;
  p.add_term({mx, ny}, c);
  return p;
}

mpq_class CommPoly::coeff(std::uint32_t mx, std::uint32_t ny) const {
  auto it = terms_.find({mx, ny});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void CommPoly::add_term(const Key& k, const mpq_class& value) {
  mpq_class c(value);
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
  CommPoly r(a);
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) {
  CommPoly r(a);
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

CommPoly operator*(const mpq_class& c, const CommPoly& p) {
  CommPoly r;
  for (const auto& [k, v] : p.terms_) r.add_term(k, c * v);
  return r;
}

std::string CommPoly::str() const {
  // Reuse the plane printer; its ordering and sign handling are what we want.
  PlanePoly p;
  for (const auto& [k, c] : terms_) p.add_term({k.first, k.second}, Scalar(c));
  return p.str();
}

CommPoly apply_derivation(const CommPoly& dx, const CommPoly& dy, const CommPoly& p) {
  CommPoly r;
  for (const auto& [k, c] : p.terms()) {
    const auto [m, n] = k;
    if (m > 0) r = r + (c * m) * CommPoly::term(1, m - 1, n) * dx;
    if (n > 0) r = r + (c * n) * CommPoly::term(1, m, n - 1) * dy;
  }
  return r;
}

CommPoly ClassicalAction::h(const CommPoly& p) const {
  CommPoly r;
  for (const auto& [k, c] : p.terms()) r.add_term(k, c * (h_x * static_cast<long>(k.first) + h_y * static_cast<long>(k.second)));
  return r;
}

CommPoly ClassicalAction::e(const CommPoly& p) const { return apply_derivation(e_x, e_y, p); }
CommPoly ClassicalAction::f(const CommPoly& p) const { return apply_derivation(f_x, f_y, p); }

namespace {

struct Entry {
  const char* name;
  const PlanePoly* value;
  CommPoly* out;
};

}  // namespace

ClassicalResult classical_limit(const Action& action) {
  ClassicalAction ca;
  const auto a = as_q_power(action.alpha(), 8);
  if (!a) return NoLimit{"alpha", action.alpha().str(), "k(x) weight is not q^a with |a| <= 8"};
  const auto b = as_q_power(action.beta(), 8);
  if (!b) return NoLimit{"beta", action.beta().str(), "k(y) weight is not q^b with |b| <= 8"};
  ca.h_x = *a;
  ca.h_y = *b;
  const Entry entries[] = {{"e(x)", &action.e_x(), &ca.e_x},
                           {"e(y)", &action.e_y(), &ca.e_y},
                           {"f(x)", &action.f_x(), &ca.f_x},
                           {"f(y)", &action.f_y(), &ca.f_y}};
  for (const auto& en : entries)
    for (const auto& [m, c] : en.value->terms()) {
      const auto v = eval_at_one(c);
      if (!v) return NoLimit{en.name, c.str(), "coefficient of " + m.str() + " has a pole at q = 1"};
      en.out->add_term({m.x, m.y}, *v);
    }
  return ca;
}

Sl2Report check_sl2(const ClassicalAction& ca, std::uint32_t max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max_degree must be at least 2");
  Sl2Report r;
  r.max_degree = max_degree;
  const mpq_class two(2);
  for (std::uint32_t d = 0; d <= max_degree; ++d)
    for (std::uint32_t i = 0; i <= d; ++i) {
      const std::uint32_t mx = d - i, ny = i;
      const CommPoly p = CommPoly::term(1, mx, ny);
      const std::pair<const char*, CommPoly> rels[] = {
          {"[h,e] = 2e", ca.h(ca.e(p)) - ca.e(ca.h(p)) - two * ca.e(p)},
          {"[h,f] = -2f", ca.h(ca.f(p)) - ca.f(ca.h(p)) + two * ca.f(p)},
          {"[e,f] = h", ca.e(ca.f(p)) - ca.f(ca.e(p)) - ca.h(p)},
      };
      for (const auto& [name, residual] : rels) {
        ++r.checks;
        if (residual.is_zero()) continue;
        r.passed = false;
        r.failures.push_back({name, mx, ny, residual});
      }
    }
  return r;
}

}  // namespace uqsl2
