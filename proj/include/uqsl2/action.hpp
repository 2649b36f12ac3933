// U_q(sl2)-actions on the quantum plane.
//
// An action is fixed by its values on x and y. k acts diagonally, so it is
// stored as the weight pair (alpha, beta) with k(x) = alpha x, k(y) = beta y.
// e and f extend to all monomials through the coproduct
//   k(uv) = k(u) k(v),  e(uv) = u e(v) + e(u) k(v),  f(uv) = f(u) v + k^-1(u) f(v).
#pragma once

#include "uqsl2/plane.hpp"
#include "uqsl2/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace uqsl2 {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroPolynomial : public std::invalid_argument {
 public:
  ZeroPolynomial() : std::invalid_argument("zero polynomial has no weight") {}
};

enum class Gen : std::uint8_t { K, Kinv, E, F };

const char* gen_name(Gen g);

struct WeightPair {
  Scalar alpha;
  Scalar beta;

  WeightPair(Scalar a, Scalar b);
  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Diagonal automorphism x -> theta x, y -> omega y. Every automorphism of the
/// quantum plane has this form.
struct DiagonalAutomorphism {
  Scalar theta;
  Scalar omega;

  DiagonalAutomorphism(Scalar t, Scalar w);
  static DiagonalAutomorphism identity() { return {1, 1}; }
  PlanePoly operator()(const PlanePoly& p) const;
  /// (*this) after `first`.
  DiagonalAutomorphism after(const DiagonalAutomorphism& first) const;
  friend bool operator==(const DiagonalAutomorphism&, const DiagonalAutomorphism&) = default;
};

/// Full action matrix, with the k row reduced to its weights.
class Action {
 public:
  /// Throws InvalidParameter if an e/f entry is not a weight vector.
  Action(WeightPair weights, PlanePoly e_x, PlanePoly e_y, PlanePoly f_x, PlanePoly f_y);

  const WeightPair& weights() const { return weights_; }
  const Scalar& alpha() const { return weights_.alpha; }
  const Scalar& beta() const { return weights_.beta; }
  const PlanePoly& e_x() const { return e_x_; }
  const PlanePoly& e_y() const { return e_y_; }
  const PlanePoly& f_x() const { return f_x_; }
  const PlanePoly& f_y() const { return f_y_; }
  /// Value of generator g (E or F) on x or y.
  const PlanePoly& entry(Gen g, Axis v) const;

  Action with_entry(Gen g, Axis v, PlanePoly value) const;
  Action with_weights(WeightPair w) const;

  /// Eigenvalue of k on x^m y^n.
  Scalar monomial_weight(const Monomial& m) const;

  friend bool operator==(const Action&, const Action&) = default;

 private:
  WeightPair weights_;
  PlanePoly e_x_;
  PlanePoly e_y_;
  PlanePoly f_x_;
  PlanePoly f_y_;
};

using Word = std::vector<Gen>;

/// Linear combination of words in the free algebra on k, k^-1, e, f. Words act
/// right to left: (ab)u = a(bu). No relations are applied inside the algebra.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar>;

  AlgebraElement() = default;
  AlgebraElement(const Scalar& c);  // NOLINT(google-explicit-constructor)
  AlgebraElement(Gen g);            // NOLINT(google-explicit-constructor)
  static AlgebraElement word(Word w, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);

  std::string str() const;

 private:
  void add(const Word& w, const Scalar& c);
  Terms terms_;
};

/// Applies generators to polynomials under a fixed action, caching the image of
/// each (generator, monomial) pair. Not safe for concurrent use; give each
/// thread its own engine.
class ActionEngine {
 public:
  explicit ActionEngine(Action action);

  const Action& action() const { return action_; }

  PlanePoly apply(Gen g, const PlanePoly& p);
  PlanePoly apply(const Word& w, const PlanePoly& p);
  PlanePoly apply(const AlgebraElement& elt, const PlanePoly& p);
  const PlanePoly& apply_monomial(Gen g, const Monomial& m);

  /// g(uv) expanded through the coproduct, from the images of u and v.
  PlanePoly leibniz(Gen g, const PlanePoly& u, const PlanePoly& v);

 private:
  PlanePoly compute_monomial(Gen g, const Monomial& m);

  Action action_;
  std::map<std::pair<Gen, std::pair<std::uint32_t, std::uint32_t>>, PlanePoly> memo_;
};

PlanePoly apply(const AlgebraElement& elt, const PlanePoly& p, const Action& action);

/// The relations of U_q(sl2), each as an element that must act by zero.
struct NamedRelation {
  std::string name;
  AlgebraElement element;
};
const std::vector<NamedRelation>& algebra_relations();

struct AxiomFailure {
  std::string check;     // "relation", "plane_relation", "split", "unit"
  std::string relation;  // relation name or generator
  Monomial monomial;     // offending monomial (left factor for splits)
  std::optional<Monomial> right;  // right factor for split checks
  PlanePoly residual;
};

struct AxiomReport {
  bool passed = true;
  std::uint32_t max_degree = 0;
  std::size_t checks = 0;
  std::vector<AxiomFailure> failures;
};

/// Checks every module-algebra axiom on all monomials of degree <= max_degree:
/// the algebra relations on each monomial, g(yx) = q g(xy) for each generator,
/// g(uv) = coproduct expansion for every monomial pair with deg(uv) <= max_degree,
/// and the unit axiom. Throws std::invalid_argument if max_degree < 2.
AxiomReport check_module_algebra(const Action& action, std::uint32_t max_degree);

/// Common k-eigenvalue of the terms of p; nullopt if they disagree.
/// Throws ZeroPolynomial for p = 0.
std::optional<Scalar> weight_of(const PlanePoly& p, const Action& action);

/// The action h -> Psi o pi(h) o Psi^-1.
Action conjugate(const Action& action, const DiagonalAutomorphism& aut);

}  // namespace uqsl2
