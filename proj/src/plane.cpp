#include "uqsl2/plane.hpp"

#include <sstream>

namespace uqsl2 {

std::string Monomial::str() const {
  if (x == 0 && y == 0) return "1";
  std::string s;
  if (x > 0) s += x == 1 ? "x" : "x^" + std::to_string(x);
  if (y > 0) {
    if (!s.empty()) s += "*";
    s += y == 1 ? "y" : "y^" + std::to_string(y);
  }
  return s;
}

PlanePoly::PlanePoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

PlanePoly PlanePoly::term(const Scalar& c, Monomial m) {
  PlanePoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Scalar PlanePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<std::uint32_t> PlanePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

void PlanePoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PlanePoly& PlanePoly::operator+=(const PlanePoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

PlanePoly& PlanePoly::operator-=(const PlanePoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

PlanePoly operator+(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly r(a);
  r += b;
  return r;
}

PlanePoly operator-(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly r(a);
  r -= b;
  return r;
}

PlanePoly PlanePoly::operator-() const {
  PlanePoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PlanePoly operator*(const Scalar& c, const PlanePoly& p) {
  if (c.is_zero()) return {};
  PlanePoly r;
  for (const auto& [m, v] : p.terms_) r.terms_.emplace(m, c * v);
  return r;
}

std::pair<Scalar, Monomial> multiply_monomials(const Monomial& u, const Monomial& v) {
  const long swaps = static_cast<long>(u.y) * static_cast<long>(v.x);
  return {Scalar::q_pow(swaps), Monomial{u.x + v.x, u.y + v.y}};
}

PlanePoly operator*(const PlanePoly& a, const PlanePoly& b) {
  PlanePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [twist, m] = multiply_monomials(ma, mb);
      r.add_term(m, twist * ca * cb);
    }
  return r;
}

PlanePoly multiply(const PlanePoly& a, const PlanePoly& b) { return a * b; }

PlanePoly homogeneous_component(const PlanePoly& p, std::uint32_t degree) {
  PlanePoly r;
  for (const auto& [m, c] : p.terms())
    if (m.degree() == degree) r.add_term(m, c);
  return r;
}

PlanePoly project_axis(const PlanePoly& p, Axis axis) {
  PlanePoly r;
  for (const auto& [m, c] : p.terms())
    if ((axis == Axis::X && m.y == 0) || (axis == Axis::Y && m.x == 0)) r.add_term(m, c);
  return r;
}

std::string PlanePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool single = terms_.size() == 1;
  for (const auto& [m, c] : terms_) {
    const bool constant = m.x == 0 && m.y == 0;
    std::string coeff;
    bool negative = false;
    if (c.is_atomic()) {
      coeff = c.str();
      if (!coeff.empty() && coeff[0] == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
      if (!constant && coeff == "1") coeff.clear();
    } else {
      coeff = (single && constant) ? c.str() : "(" + c.str() + ")";
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (constant) {
      os << coeff;
    } else {
      if (!coeff.empty()) os << coeff << "*";
      os << m.str();
    }
  }
  return os.str();
}

}  // namespace uqsl2
