// Normal-form polynomials in the quantum plane C_q[x,y], where yx = q xy.
//
// Every element is stored as a sum of terms c * x^m y^n (x before y).
#pragma once

#include "uqsl2/scalar.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace uqsl2 {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  std::uint32_t degree() const { return x + y; }
  std::string str() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first, then higher x-exponent first.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.x > b.x;
  }
};

enum class Axis { X, Y };

class PlanePoly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedOrder>;

  PlanePoly() = default;
  PlanePoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  PlanePoly(long c) : PlanePoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static PlanePoly term(const Scalar& c, Monomial m);
  static PlanePoly x() { return term(1, {1, 0}); }
  static PlanePoly y() { return term(1, {0, 1}); }
  static PlanePoly monomial(std::uint32_t mx, std::uint32_t ny) { return term(1, {mx, ny}); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Scalar coeff(const Monomial& m) const;
  /// Highest total degree of a term; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;

  /// Adds c * m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  friend PlanePoly operator+(const PlanePoly& a, const PlanePoly& b);
  friend PlanePoly operator-(const PlanePoly& a, const PlanePoly& b);
  friend PlanePoly operator*(const PlanePoly& a, const PlanePoly& b);
  friend PlanePoly operator*(const Scalar& c, const PlanePoly& p);
  PlanePoly operator-() const;
  PlanePoly& operator+=(const PlanePoly& b);
  PlanePoly& operator-=(const PlanePoly& b);
  friend bool operator==(const PlanePoly& a, const PlanePoly& b) = default;

  /// Text such as `x^2 + (1+q)*x*y + y^2`, terms in graded order.
  std::string str() const;

 private:
  Terms terms_;
};

/// Product of normal-form monomials: x^a y^b * x^c y^d = q^(bc) x^(a+c) y^(b+d).
std::pair<Scalar, Monomial> multiply_monomials(const Monomial& u, const Monomial& v);

PlanePoly multiply(const PlanePoly& a, const PlanePoly& b);
PlanePoly homogeneous_component(const PlanePoly& p, std::uint32_t degree);
/// Axis::X keeps terms free of y, Axis::Y keeps terms free of x.
PlanePoly project_axis(const PlanePoly& p, Axis axis);

}  // namespace uqsl2
