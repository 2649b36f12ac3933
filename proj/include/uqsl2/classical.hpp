// The q -> 1 limit of a quantum action: k = q^h, e and f become derivations
// of the commutative polynomial ring Q[x,y].
#pragma once

#include "uqsl2/action.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uqsl2 {

/// Commutative polynomial in x, y with rational coefficients.
class CommPoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;  // (x-exponent, y-exponent)

  CommPoly() = default;
  static CommPoly term(const mpq_class& c, std::uint32_t mx, std::uint32_t ny);
  static CommPoly x() { return term(1, 1, 0); }
  static CommPoly y() { return term(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, mpq_class>& terms() const { return terms_; }
  mpq_class coeff(std::uint32_t mx, std::uint32_t ny) const;
  void add_term(const Key& k, const mpq_class& c);

  friend CommPoly operator+(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend CommPoly operator*(const mpq_class& c, const CommPoly& p);
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  /// Graded order as in the quantum plane, e.g. `-x^2 + y^4`.
  std::string str() const;

 private:
  std::map<Key, mpq_class> terms_;
};

struct ClassicalAction {
  long h_x = 0;
  long h_y = 0;
  CommPoly e_x, e_y, f_x, f_y;

  /// h as the grading derivation: h(x^m y^n) = (h_x m + h_y n) x^m y^n.
  CommPoly h(const CommPoly& p) const;
  CommPoly e(const CommPoly& p) const;
  CommPoly f(const CommPoly& p) const;
  friend bool operator==(const ClassicalAction&, const ClassicalAction&) = default;
};

/// Derivation of Q[x,y] with the given values on x and y.
CommPoly apply_derivation(const CommPoly& dx, const CommPoly& dy, const CommPoly& p);

struct NoLimit {
  std::string what;    // "alpha", "beta", or an entry name such as "f(y)"
  std::string value;   // the offending weight or coefficient
  std::string reason;
};

using ClassicalResult = std::variant<ClassicalAction, NoLimit>;

/// Weights must be q^a with |a| <= 8; every coefficient must be finite at q = 1.
ClassicalResult classical_limit(const Action& action);

struct Sl2Failure {
  std::string relation;  // "[h,e] = 2e", "[h,f] = -2f", "[e,f] = h"
  std::uint32_t mx, ny;  // monomial the relation was applied to
  CommPoly residual;
};

struct Sl2Report {
  bool passed = true;
  std::uint32_t max_degree = 0;
  std::size_t checks = 0;
  std::vector<Sl2Failure> failures;
};

/// Throws std::invalid_argument if max_degree < 2.
Sl2Report check_sl2(const ClassicalAction& ca, std::uint32_t max_degree);

}  // namespace uqsl2
