// The six nonempty series of U_q(sl2)-module algebra structures on the quantum
// plane, their zero/star labels, and isomorphism decisions within a series.
#pragma once

#include "uqsl2/action.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace uqsl2 {

// --- families ----------------------------------------------------------------

namespace family {

struct Trivial {
  int sign_x = 1;  // k(x) = sign_x x
  int sign_y = 1;  // k(y) = sign_y y
  friend bool operator==(const Trivial&, const Trivial&) = default;
};
struct Standard {
  Scalar tau;
  friend bool operator==(const Standard&, const Standard&) = default;
};
struct EB0 {
  Scalar b0;
  friend bool operator==(const EB0&, const EB0&) = default;
};
struct FC0 {
  Scalar c0;
  friend bool operator==(const FC0&, const FC0&) = default;
};
struct EA0 {
  Scalar a0;
  Scalar s;
  Scalar t;
  friend bool operator==(const EA0&, const EA0&) = default;
};
struct FD0 {
  Scalar d0;
  Scalar s;
  Scalar t;
  friend bool operator==(const FD0&, const FD0&) = default;
};

}  // namespace family

using SeriesFamily =
    std::variant<family::Trivial, family::Standard, family::EB0, family::FC0, family::EA0, family::FD0>;

enum class FamilyTag { Trivial, Standard, EB0, FC0, EA0, FD0 };

FamilyTag tag_of(const SeriesFamily& f);
const char* tag_name(FamilyTag t);
std::optional<FamilyTag> parse_tag(const std::string& name);

/// Throws InvalidParameter when a distinguished parameter is zero or a
/// Trivial sign is not +-1.
void validate(const SeriesFamily& f);

/// The full action matrix of a family member.
Action build(const SeriesFamily& f);

/// t/(a0 s^2) for EA0, t/(d0 s^2) for FD0, when s and t are both nonzero.
std::optional<Scalar> invariant_phi(const SeriesFamily& f);

// --- star labels -------------------------------------------------------------

/// Zero/nonzero pattern of a homogeneous component of the e/f block.
/// Cell order: e(x), e(y), f(x), f(y).
struct StarPattern {
  std::array<bool, 4> cells{};

  static StarPattern zero() { return {}; }
  static StarPattern single(Gen g, Axis v);
  static StarPattern from_bits(unsigned bits);
  bool at(Gen g, Axis v) const;
  int stars() const;
  bool is_zero() const { return stars() == 0; }
  bool is_antidiagonal() const { return !cells[0] && cells[1] && cells[2] && !cells[3]; }

  /// Rows joined by '/', e.g. `0*/00`.
  std::string str() const;
  static std::optional<StarPattern> parse(const std::string& text);

  friend bool operator==(const StarPattern&, const StarPattern&) = default;
};

struct SeriesLabel {
  StarPattern level0;
  StarPattern level1;

  /// `level0;level1`, e.g. `0*/00;00/00`.
  std::string str() const;
  static std::optional<SeriesLabel> parse(const std::string& text);

  friend bool operator==(const SeriesLabel&, const SeriesLabel&) = default;
};

StarPattern star_pattern(const Action& action, unsigned level);
SeriesLabel label_of(const Action& action);

/// Weights as integer exponents: alpha = q^alpha_exp, beta = q^beta_exp.
struct WeightExponents {
  long alpha_exp;
  long beta_exp;
  WeightPair to_pair() const;
  friend bool operator==(const WeightExponents&, const WeightExponents&) = default;
};

struct ClassificationOutcome {
  enum class Kind { Excluded, Empty, Nonempty };
  Kind kind;
  std::string reason;
  std::optional<FamilyTag> family;
  /// Absent for the (zero; zero) label, whose weights are not fixed by the
  /// label alone.
  std::optional<WeightExponents> forced;
};

/// Weight constraints imposed by the stars of one pattern; nullopt-valued
/// members are unconstrained. `consistent` is false if two stars disagree.
struct PatternWeights {
  bool consistent = true;
  std::optional<long> alpha_exp;
  std::optional<long> beta_exp;
};
PatternWeights forced_weights(const StarPattern& pattern, unsigned level);

ClassificationOutcome classify_label(const SeriesLabel& label);

struct ClassificationSummary {
  std::vector<StarPattern> level0_candidates;
  std::vector<StarPattern> level1_candidates;
  int total = 0;
  int empty = 0;
  struct Entry {
    SeriesLabel label;
    FamilyTag family;
    std::optional<WeightExponents> forced;
  };
  std::vector<Entry> nonempty;
  std::vector<std::pair<SeriesLabel, std::string>> empty_labels;
};

/// Runs classify_label over every admissible (level 0, level 1) pair.
ClassificationSummary enumerate_classification();

// --- isomorphism ---------------------------------------------------------------

struct IsoVerdict {
  bool isomorphic = false;
  /// Automorphism carrying build(f1) to build(f2), when it exists in Q(q).
  std::optional<DiagonalAutomorphism> certificate;
  std::string reason;
};

IsoVerdict are_isomorphic(const SeriesFamily& f1, const SeriesFamily& f2);

}  // namespace uqsl2
