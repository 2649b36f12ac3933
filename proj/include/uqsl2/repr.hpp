// Finite slices of C_q[x,y] as U_q(sl2)-modules, and the Verma modules they
// are compared against. Every verdict here holds on the computed window only.
#pragma once

#include "uqsl2/catalog.hpp"
#include "uqsl2/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqsl2 {

class InvalidSize : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Orientation { Highest, Lowest };
const char* orientation_name(Orientation o);

/// Matrices of k, e, f on an ordered basis. Column j is the image of basis
/// element j. A column listed in leak_e / leak_f has an image that reaches past
/// the truncation, so only its in-basis part is stored.
struct TruncatedModule {
  std::vector<std::string> labels;
  std::vector<Monomial> monomials;  // empty for abstract bases
  Matrix k, e, f;
  std::set<std::size_t> leak_e, leak_f;
  /// Some image left the described subspace (not merely the truncation).
  bool escapes = false;

  std::size_t dim() const { return labels.size(); }
  const Matrix& matrix(Gen g) const;
  bool leaks(Gen g, std::size_t column) const;
  /// Text for a coordinate vector, e.g. `x^2*y^3` or `v0 + (q)*v1`.
  std::string describe(const Vec& v) const;
};

struct VermaSpec {
  Scalar lambda;
  Orientation orientation = Orientation::Highest;
  std::size_t size = 1;
};

/// Highest: k v_i = lambda q^-2i v_i, e v_{i+1} = (lambda q^-i - lambda^-1 q^i)/(q - q^-1) v_i,
/// f v_i = [i+1] v_{i+1}. Lowest is the mirror: k v_i = lambda q^2i v_i,
/// e v_i = [i+1] v_{i+1}, f v_{i+1} = (lambda^-1 q^-i - lambda q^i)/(q - q^-1) v_i.
TruncatedModule verma_matrices(const VermaSpec& spec);

struct BasisDescription {
  enum class Kind { XPowerTimesYPoly, YPowerTimesXPoly, Homogeneous, SingleMonomial };
  Kind kind;
  std::uint32_t n = 0;
  std::uint32_t m = 0;  // x-exponent for SingleMonomial

  static BasisDescription x_power_times_y_poly(std::uint32_t n) { return {Kind::XPowerTimesYPoly, n, 0}; }
  static BasisDescription y_power_times_x_poly(std::uint32_t n) { return {Kind::YPowerTimesXPoly, n, 0}; }
  static BasisDescription homogeneous(std::uint32_t n) { return {Kind::Homogeneous, n, 0}; }
  static BasisDescription single_monomial(std::uint32_t m, std::uint32_t n) { return {Kind::SingleMonomial, n, m}; }

  /// Whether the (untruncated) subspace contains this monomial.
  bool contains(const Monomial& u) const;
  std::string str() const;
  friend bool operator==(const BasisDescription&, const BasisDescription&) = default;
};

/// Subspace: images must stay in the described span. QuotientHigher: for the
/// row slices, terms further along the filtration (larger fixed exponent) are
/// dropped, giving the graded piece F_n/F_{n+1}.
enum class SliceMode { Subspace, QuotientHigher };

/// Row slices take the free exponent 0..cutoff; the homogeneous and single
/// monomial slices ignore cutoff.
TruncatedModule slice(const Action& action, const BasisDescription& basis, std::uint32_t cutoff,
                      SliceMode mode = SliceMode::Subspace);

/// Submodule generated by `generators` under e and f. Leaking columns
/// contribute only their in-basis part.
Subspace generated_submodule(const TruncatedModule& tm, const std::vector<Vec>& generators);

/// Quotient by a submodule, on the coordinates that are not pivots of its
/// echelon basis. Throws std::invalid_argument if `sub` is not invariant.
TruncatedModule quotient(const TruncatedModule& tm, const std::vector<Vec>& sub);

struct SingularVector {
  Vec vector;
  Scalar weight;
  std::string text;
};

/// Layered search: vectors killed by e (highest) or f (lowest) modulo the
/// submodule generated by the earlier layers, one weight space at a time.
std::vector<SingularVector> find_singular_vectors(const TruncatedModule& tm, Orientation kind);

struct MatrixMismatch {
  std::string matrix;
  std::size_t row;
  std::size_t col;
  Scalar expected;
  Scalar actual;
};

struct VermaMatch {
  bool isomorphic = false;
  std::vector<Scalar> scale;  // v_i = scale[i] * b_i
  std::optional<MatrixMismatch> mismatch;
  std::string reason;
};

/// Longest leading run of basis elements on which a Verma module of that size
/// can be compared: all but the last must not leak, the last may leak only
/// along the raising chain.
std::size_t usable_dimension(const TruncatedModule& tm, Orientation o);

/// Throws DimensionMismatch if spec.size exceeds the usable dimension.
VermaMatch match_verma(const TruncatedModule& tm, const std::optional<std::vector<Vec>>& quotient_of,
                       const VermaSpec& spec);

struct NonSplitCertificate {
  std::uint32_t n = 0;
  Gen op = Gen::E;
  std::uint32_t power = 1;
  Monomial source;
  Monomial target;
  Scalar scalar;           // op^power(source) = scalar * target
  bool exact = false;      // the image is exactly scalar * target
  bool kills_submodule = false;  // op^power vanishes on J_n
  bool valid() const { return exact && kills_submodule && !scalar.is_zero(); }
  std::string statement() const;
};

/// For the four families with a 0 < J_n < V_n series: EB0 and FC0 for any n,
/// EA0 and FD0 for n = 0. Throws InvalidParameter for other actions and
/// std::invalid_argument if the source monomial has degree above cutoff.
NonSplitCertificate non_split_certificate(const Action& action, std::uint32_t n, std::uint32_t cutoff);

enum class SummandType { Simple, Verma, Series };
const char* summand_type_name(SummandType t);

struct Summand {
  BasisDescription basis;
  SummandType type;
  Orientation orientation = Orientation::Highest;
  Scalar weight;                       // extremal weight (of J for a series)
  std::optional<std::size_t> dim;      // dimension (of J for a series)
  std::optional<Scalar> quotient_weight;  // Verma weight of V/J
  std::size_t window = 0;              // Verma window checked, 0 if finite
  bool graded = false;                 // checked on F_n/F_{n+1} only
  bool verified = false;
  std::vector<std::string> evidence;
};

struct CompositionReport {
  SeriesFamily family;
  std::uint32_t cutoff = 0;
  std::size_t verma_window = 0;
  std::vector<Summand> summands;
  std::vector<NonSplitCertificate> certificates;
  bool partition_ok = false;
  bool verified() const;
};

/// Decomposition of C_q[x,y] for one family member, one summand per row
/// index n <= cutoff (per monomial of degree <= cutoff for Trivial).
/// Throws InvalidSize if cutoff < 4.
CompositionReport composition_report(const SeriesFamily& family, std::uint32_t cutoff,
                                     std::size_t verma_window = 10);

}  // namespace uqsl2
