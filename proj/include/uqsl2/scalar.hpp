// Exact arithmetic in the rational function field Q(q).
//
// q is a formal indeterminate, so it is never a root of unity. Laurent
// monomials such as q^-3 are plain fractions 1/q^3; there is no separate
// Laurent type.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqsl2 {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Univariate polynomial in q with arbitrary-precision rational coefficients,
/// stored in ascending exponent order with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  QPoly(long c);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(const mpq_class& c, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; the zero polynomial has no degree.
  std::optional<std::size_t> degree() const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t k) const;
  const mpq_class& leading() const { return coeffs_.back(); }
  /// Largest k with q^k dividing the polynomial (0 for the zero polynomial).
  std::size_t valuation() const;
  bool is_monomial() const;

  QPoly shifted_down(std::size_t k) const;
  QPoly shifted_up(std::size_t k) const;
  QPoly scaled(const mpq_class& c) const;
  mpq_class eval(const mpq_class& at) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Euclidean division over Q; throws DivisionByZero if `d` is zero.
  static void divmod(const QPoly& n, const QPoly& d, QPoly& quot, QPoly& rem);
  /// Monic greatest common divisor (zero iff both inputs are zero).
  static QPoly gcd(QPoly a, QPoly b);

  /// Exact square root if the polynomial is a square in Q[q].
  std::optional<QPoly> sqrt() const;

  /// Ascending-order text, e.g. `1+q^2` or `-3/2*q`.
  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// Element of Q(q) held as a reduced fraction. The denominator is a primitive
/// integer polynomial with positive leading coefficient, so every value has
/// exactly one stored representation.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c);           // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  Scalar(QPoly num, QPoly den);

  /// q^k for any integer k.
  static Scalar q_pow(long k);
  static Scalar q() { return q_pow(1); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// True for c*q^k with c rational and k any integer.
  bool is_laurent_monomial() const;

  Scalar inverse() const;
  Scalar pow(long n) const;
  /// Exact square root in Q(q), if one exists.
  std::optional<Scalar> sqrt() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  /// `num/den` with ascending polynomials, e.g. `(1+q^2)/q`.
  std::string str() const;
  /// True when str() is a single signed factor that needs no parentheses
  /// as a coefficient (e.g. `q`, `-2`, `3/4*q^2`).
  bool is_atomic() const;

 private:
  void canonicalize();
  QPoly num_;
  QPoly den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// [n]_q = (q^n - q^-n)/(q - q^-1), for any integer n.
Scalar quantum_integer(long n);

/// Value at q = 1 of the reduced fraction; nullopt when q = 1 is a pole.
std::optional<mpq_class> eval_at_one(const Scalar& a);

/// a = q^k for some integer |k| <= bound.
std::optional<long> as_q_power(const Scalar& a, long bound);

}  // namespace uqsl2
