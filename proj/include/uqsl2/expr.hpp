// Expressions over the quantum plane with generator applications, e.g.
// `e(f(x)) - q^-1*x^2*y`. Products are noncommutative and left-associative.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ['^' ['-'] int]
//   atom   := 'x' | 'y' | 'q' | int | '(' expr ')' | gen '(' expr ')'
//   gen    := 'k' | 'kinv' | 'e' | 'f'
//
// Division is only by scalars, and negative exponents only on scalars.
#pragma once

#include "uqsl2/action.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>

namespace uqsl2 {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NonIntegerExponent : public ParseError {
 public:
  using ParseError::ParseError;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExprKind { Number, Q, X, Y, Neg, Add, Sub, Mul, Div, Pow, Apply };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  mpz_class number;   // Number
  long exponent = 0;  // Pow
  Gen gen = Gen::K;   // Apply
  ExprPtr lhs;        // operand of Neg, Pow, Apply; left side of binary nodes
  ExprPtr rhs;

  /// Free of x, y and generator applications.
  bool is_scalar() const;
};

/// Structural equality of trees.
bool operator==(const Expr& a, const Expr& b);

ExprPtr parse_expression(const std::string& src);
/// Text that parses back to a structurally equal tree.
std::string render(const Expr& e);
/// Generator applications need an action; without one they raise EvalError.
PlanePoly evaluate(const Expr& e, const Action* action = nullptr);
/// Parses and evaluates text that must denote an element of Q(q).
Scalar parse_scalar(const std::string& src);

}  // namespace uqsl2
