#include "uqsl2/repr.hpp"

#include <map>
#include <sstream>

namespace uqsl2 {

const char* orientation_name(Orientation o) { return o == Orientation::Highest ? "highest" : "lowest"; }

const char* summand_type_name(SummandType t) {
  switch (t) {
    case SummandType::Simple: return "simple";
    case SummandType::Verma: return "verma";
    case SummandType::Series: return "series";
  }
  return "?";
}

const Matrix& TruncatedModule::matrix(Gen g) const {
  switch (g) {
    case Gen::K: return k;
    case Gen::E: return e;
    case Gen::F: return f;
    case Gen::Kinv: break;
  }
  throw std::invalid_argument("no stored matrix for kinv");
}

bool TruncatedModule::leaks(Gen g, std::size_t column) const {
  if (g == Gen::E) return leak_e.count(column) != 0;
  if (g == Gen::F) return leak_f.count(column) != 0;
  return false;
}

std::string TruncatedModule::describe(const Vec& v) const {
  if (!monomials.empty()) {
    PlanePoly p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(monomials[i], v[i]);
    return p.str();
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!v[i].is_one()) os << "(" << v[i].str() << ")*";
    os << labels[i];
  }
  return first ? "0" : os.str();
}

// --- Verma -----------------------------------------------------------------------

TruncatedModule verma_matrices(const VermaSpec& spec) {
  if (spec.size < 1) throw InvalidSize("Verma truncation must have size >= 1");
  if (spec.lambda.is_zero()) throw InvalidParameter("Verma weight must be nonzero");
  const std::size_t n = spec.size;
  const Scalar& lam = spec.lambda;
  const Scalar lam_inv = lam.inverse();
  const Scalar bracket = (Scalar::q() - Scalar::q_pow(-1)).inverse();
  const bool highest = spec.orientation == Orientation::Highest;

  TruncatedModule tm;
  tm.k = tm.e = tm.f = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    tm.labels.push_back("v" + std::to_string(i));
    const long s = static_cast<long>(i);
    tm.k(i, i) = lam * Scalar::q_pow(highest ? -2 * s : 2 * s);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long s = static_cast<long>(i);
    if (highest) {
      tm.e(i, i + 1) = (lam * Scalar::q_pow(-s) - lam_inv * Scalar::q_pow(s)) * bracket;
      tm.f(i + 1, i) = quantum_integer(s + 1);
    } else {
      tm.e(i + 1, i) = quantum_integer(s + 1);
      tm.f(i, i + 1) = (lam_inv * Scalar::q_pow(-s) - lam * Scalar::q_pow(s)) * bracket;
    }
  }
  (highest ? tm.leak_f : tm.leak_e).insert(n - 1);
  return tm;
}

// --- slices ----------------------------------------------------------------------

bool BasisDescription::contains(const Monomial& u) const {
  switch (kind) {
    case Kind::XPowerTimesYPoly: return u.x == n;
    case Kind::YPowerTimesXPoly: return u.y == n;
    case Kind::Homogeneous: return u.degree() == n;
    case Kind::SingleMonomial: return u.x == m && u.y == n;
  }
  return false;
}

std::string BasisDescription::str() const {
  switch (kind) {
    case Kind::XPowerTimesYPoly: return "x_power_times_y_poly(" + std::to_string(n) + ")";
    case Kind::YPowerTimesXPoly: return "y_power_times_x_poly(" + std::to_string(n) + ")";
    case Kind::Homogeneous: return "homogeneous(" + std::to_string(n) + ")";
    case Kind::SingleMonomial:
      return "single_monomial(" + std::to_string(m) + "," + std::to_string(n) + ")";
  }
  return "?";
}

namespace {

std::vector<Monomial> slice_basis(const BasisDescription& b, std::uint32_t cutoff) {
  std::vector<Monomial> out;
  using K = BasisDescription::Kind;
  switch (b.kind) {
    case K::XPowerTimesYPoly:
      for (std::uint32_t p = 0; p <= cutoff; ++p) out.push_back({b.n, p});
      break;
    case K::YPowerTimesXPoly:
      for (std::uint32_t p = 0; p <= cutoff; ++p) out.push_back({p, b.n});
      break;
    case K::Homogeneous:
      for (std::uint32_t i = 0; i <= b.n; ++i) out.push_back({b.n - i, i});
      break;
    case K::SingleMonomial: out.push_back({b.m, b.n}); break;
  }
  return out;
}

// Further along the filtration of a row slice.
bool is_higher(const BasisDescription& b, const Monomial& u) {
  if (b.kind == BasisDescription::Kind::XPowerTimesYPoly) return u.x > b.n;
  if (b.kind == BasisDescription::Kind::YPowerTimesXPoly) return u.y > b.n;
  return false;
}

std::string weight_text(const Scalar& w) { return w.str(); }

}  // namespace

TruncatedModule slice(const Action& action, const BasisDescription& basis, std::uint32_t cutoff,
                      SliceMode mode) {
  if (cutoff < 1) throw InvalidSize("slice cutoff must be >= 1");
  TruncatedModule tm;
  tm.monomials = slice_basis(basis, cutoff);
  const std::size_t n = tm.monomials.size();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[{tm.monomials[i].x, tm.monomials[i].y}] = i;
    tm.labels.push_back(tm.monomials[i].str());
  }
  tm.k = tm.e = tm.f = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) tm.k(j, j) = action.monomial_weight(tm.monomials[j]);

  ActionEngine engine(action);
  for (Gen g : {Gen::E, Gen::F}) {
    Matrix& m = g == Gen::E ? tm.e : tm.f;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [u, c] : engine.apply_monomial(g, tm.monomials[j]).terms()) {
        auto it = index.find({u.x, u.y});
        if (it != index.end()) {
          m(it->second, j) = c;
        } else if (basis.contains(u)) {
          (g == Gen::E ? tm.leak_e : tm.leak_f).insert(j);
        } else if (!(mode == SliceMode::QuotientHigher && is_higher(basis, u))) {
          tm.escapes = true;
        }
      }
    }
  }
  return tm;
}

Subspace generated_submodule(const TruncatedModule& tm, const std::vector<Vec>& generators) {
  Subspace s(tm.dim());
  std::vector<Vec> todo = generators;
  while (!todo.empty()) {
    Vec v = std::move(todo.back());
    todo.pop_back();
    if (!s.add(v)) continue;
    todo.push_back(tm.e * v);
    todo.push_back(tm.f * v);
  }
  return s;
}

namespace {

bool touches(const Vec& v, const TruncatedModule& tm, Gen g) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero() && tm.leaks(g, i)) return true;
  return false;
}

}  // namespace

TruncatedModule quotient(const TruncatedModule& tm, const std::vector<Vec>& sub) {
  Subspace s(tm.dim());
  for (const auto& v : sub) s.add(v);
  for (const auto& b : s.basis())
    for (Gen g : {Gen::E, Gen::F})
      if (!touches(b, tm, g) && !s.contains(tm.matrix(g) * b))
        throw std::invalid_argument("quotient by a subspace that is not a submodule");

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < tm.dim(); ++i)
    if (!s.is_pivot(i)) keep.push_back(i);

  TruncatedModule out;
  out.escapes = tm.escapes;
  const std::size_t n = keep.size();
  out.k = out.e = out.f = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    out.labels.push_back(tm.labels[keep[a]]);
    if (!tm.monomials.empty()) out.monomials.push_back(tm.monomials[keep[a]]);
  }
  for (Gen g : {Gen::K, Gen::E, Gen::F}) {
    Matrix& m = g == Gen::K ? out.k : (g == Gen::E ? out.e : out.f);
    for (std::size_t b = 0; b < n; ++b) {
      const Vec img = s.reduce(tm.matrix(g).column(keep[b]));
      for (std::size_t a = 0; a < n; ++a) m(a, b) = img[keep[a]];
      if (tm.leaks(g, keep[b])) (g == Gen::E ? out.leak_e : out.leak_f).insert(b);
    }
  }
  return out;
}

std::vector<SingularVector> find_singular_vectors(const TruncatedModule& tm, Orientation kind) {
  const Gen g = kind == Orientation::Highest ? Gen::E : Gen::F;
  const Matrix& m = tm.matrix(g);
  const std::size_t n = tm.dim();

  std::vector<std::pair<Scalar, std::vector<std::size_t>>> groups;
  for (std::size_t j = 0; j < n; ++j) {
    if (tm.leaks(g, j)) continue;
    const Scalar& w = tm.k(j, j);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& gr) { return gr.first == w; });
    if (it == groups.end()) groups.push_back({w, {j}});
    else it->second.push_back(j);
  }

  std::vector<SingularVector> out;
  Subspace sub(n);
  for (;;) {
    std::vector<Vec> layer;
    Subspace probe = sub;
    for (const auto& [w, cols] : groups) {
      Matrix a(n, cols.size());
      for (std::size_t t = 0; t < cols.size(); ++t) a.set_column(t, sub.reduce(m.column(cols[t])));
      for (const Vec& kv : kernel(a)) {
        Vec v(n);
        for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = kv[t];
        v = sub.reduce(v);
        if (!probe.add(v)) continue;
        out.push_back({v, w, tm.describe(v)});
        layer.push_back(std::move(v));
      }
    }
    if (layer.empty()) break;
    std::vector<Vec> gens = sub.basis();
    gens.insert(gens.end(), layer.begin(), layer.end());
    sub = generated_submodule(tm, gens);
  }
  return out;
}

// --- Verma matching ----------------------------------------------------------------

std::size_t usable_dimension(const TruncatedModule& tm, Orientation o) {
  const Gen forward = o == Orientation::Highest ? Gen::F : Gen::E;
  const Gen backward = o == Orientation::Highest ? Gen::E : Gen::F;
  std::size_t n = 0;
  for (std::size_t j = 0; j < tm.dim(); ++j) {
    if (tm.leaks(backward, j)) break;
    n = j + 1;
    if (tm.leaks(forward, j)) break;
  }
  return n;
}

VermaMatch match_verma(const TruncatedModule& tm, const std::optional<std::vector<Vec>>& quotient_of,
                       const VermaSpec& spec) {
  const TruncatedModule m = quotient_of ? quotient(tm, *quotient_of) : tm;
  VermaMatch out;
  if (m.escapes) {
    out.reason = "slice is not closed under e and f";
    return out;
  }
  const std::size_t n = spec.size;
  const std::size_t usable = usable_dimension(m, spec.orientation);
  if (n > usable)
    throw DimensionMismatch("Verma size " + std::to_string(n) + " exceeds usable dimension " +
                            std::to_string(usable));
  const TruncatedModule v = verma_matrices(spec);
  const Gen forward = spec.orientation == Orientation::Highest ? Gen::F : Gen::E;

  // The raising chain fixes the rescaling: op b_i = phi_i b_{i+1} must become
  // op v_i = [i+1] v_{i+1}.
  out.scale.assign(n, Scalar(1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Scalar& phi = m.matrix(forward)(i + 1, i);
    const Scalar& want = v.matrix(forward)(i + 1, i);
    if (phi.is_zero()) {
      out.mismatch = MatrixMismatch{gen_name(forward), i + 1, i, want, phi};
      out.reason = "raising chain breaks at " + m.labels[i];
      out.scale.resize(i + 1);
      return out;
    }
    out.scale[i + 1] = out.scale[i] * phi / want;
  }
  for (Gen g : {Gen::K, Gen::E, Gen::F}) {
    const Matrix& a = m.matrix(g);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m.dim(); ++i) {
        Scalar actual, expected;
        if (i < n) {
          actual = a(i, j) * out.scale[j] / out.scale[i];
          expected = v.matrix(g)(i, j);
        } else {
          if (g == forward && j + 1 == n) continue;
          actual = a(i, j);
        }
        if (actual != expected) {
          out.mismatch = MatrixMismatch{gen_name(g), i, j, expected, actual};
          out.reason = std::string(gen_name(g)) + " differs at (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
          return out;
        }
      }
  }
  out.isomorphic = true;
  return out;
}

// --- non-splitting -------------------------------------------------------------------

std::string NonSplitCertificate::statement() const {
  std::string lhs = std::string(gen_name(op));
  if (power != 1) lhs += "^" + std::to_string(power);
  lhs += "(" + source.str() + ")";
  PlanePoly rhs = PlanePoly::term(scalar, target);
  return lhs + " = " + rhs.str();
}

NonSplitCertificate non_split_certificate(const Action& action, std::uint32_t n, std::uint32_t cutoff) {
  const auto a = as_q_power(action.alpha(), 8);
  const auto b = as_q_power(action.beta(), 8);
  NonSplitCertificate c;
  c.n = n;
  c.power = n + 1;
  // J_n, listed by its monomials.
  std::vector<Monomial> j_basis;
  if (a == 1 && b == -2) {  // EB0: J_n = span x^n y^p, p <= n
    c.op = Gen::E;
    c.source = {n, n + 1};
    c.target = {n, 0};
    for (std::uint32_t p = 0; p <= n; ++p) j_basis.push_back({n, p});
  } else if (a == 2 && b == -1) {  // FC0: mirrored
    c.op = Gen::F;
    c.source = {n + 1, n};
    c.target = {0, n};
    for (std::uint32_t p = 0; p <= n; ++p) j_basis.push_back({p, n});
  } else if ((a == -2 && b == -1) || (a == 1 && b == 2)) {  // EA0 / FD0: J = C1
    if (n != 0) throw InvalidParameter("this family has a 0 < J < V series only for n = 0");
    const bool ea0 = a == -2;
    c.op = ea0 ? Gen::E : Gen::F;
    c.source = ea0 ? Monomial{1, 0} : Monomial{0, 1};
    c.target = {0, 0};
    j_basis.push_back({0, 0});
  } else {
    throw InvalidParameter("action has no non-split 0 < J < V series");
  }
  if (c.source.degree() > cutoff)
    throw std::invalid_argument("cutoff " + std::to_string(cutoff) + " is below the degree of " +
                                c.source.str());

  ActionEngine engine(action);
  const Word word(c.power, c.op);
  const PlanePoly img = engine.apply(word, PlanePoly::monomial(c.source.x, c.source.y));
  c.scalar = img.coeff(c.target);
  c.exact = img == PlanePoly::term(c.scalar, c.target);
  c.kills_submodule = true;
  for (const auto& u : j_basis)
    if (!engine.apply(word, PlanePoly::monomial(u.x, u.y)).is_zero()) c.kills_submodule = false;
  return c;
}

// --- composition reports -----------------------------------------------------------

bool CompositionReport::verified() const {
  if (!partition_ok) return false;
  for (const auto& s : summands)
    if (!s.verified) return false;
  for (const auto& c : certificates)
    if (!c.valid()) return false;
  return true;
}

namespace {

Summand make_summand(BasisDescription basis, SummandType type, Orientation o = Orientation::Highest) {
  return Summand{basis, type, o, Scalar(), std::nullopt, std::nullopt, 0, false, false, {}};
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

std::string list_singular(const std::vector<SingularVector>& sv) {
  std::string s;
  for (const auto& v : sv) {
    if (!s.empty()) s += ", ";
    s += v.text + " (weight " + weight_text(v.weight) + ")";
  }
  return s.empty() ? "none" : s;
}

Summand trivial_summand(const Action& action, Monomial u) {
  Summand s = make_summand(BasisDescription::single_monomial(u.x, u.y), SummandType::Simple);
  const TruncatedModule tm = slice(action, s.basis, 1);
  s.weight = tm.k(0, 0);
  s.dim = 1;
  s.verified = !tm.escapes && tm.e.is_zero() && tm.f.is_zero();
  s.evidence.push_back("e and f vanish on " + u.str());
  return s;
}

Summand standard_summand(const Action& action, std::uint32_t n) {
  Summand s = make_summand(BasisDescription::homogeneous(n), SummandType::Simple);
  const TruncatedModule tm = slice(action, s.basis, 1);
  const auto sv = find_singular_vectors(tm, Orientation::Highest);
  s.dim = tm.dim();
  const bool closed = !tm.escapes && tm.leak_e.empty() && tm.leak_f.empty();
  bool simple = sv.size() == 1 && generated_submodule(tm, {sv[0].vector}).size() == tm.dim();
  if (!sv.empty()) s.weight = sv[0].weight;
  s.verified = closed && simple && s.weight == action.alpha().pow(n);
  s.evidence.push_back(closed ? "invariant under e and f" : "not invariant");
  s.evidence.push_back("highest weight vectors: " + list_singular(sv));
  s.evidence.push_back(simple ? "generated by its only highest weight vector" : "not cyclic on its highest weight vector");
  return s;
}

// 0 < J < V for a row slice whose first jdim basis elements span J.
Summand series_summand(const Action& action, BasisDescription desc, std::size_t jdim, Orientation o,
                       const Scalar& quotient_weight, std::size_t window, SliceMode mode,
                       const NonSplitCertificate& cert) {
  Summand s = make_summand(desc, SummandType::Series, o);
  s.dim = jdim;
  s.quotient_weight = quotient_weight;
  s.window = window;
  s.graded = mode == SliceMode::QuotientHigher;
  const Gen forward = o == Orientation::Highest ? Gen::F : Gen::E;
  const TruncatedModule tm = slice(action, desc, static_cast<std::uint32_t>(jdim + window), mode);
  const std::size_t top = jdim - 1;

  bool ok = !tm.escapes;
  if (tm.escapes) s.evidence.push_back("slice is not invariant");

  const bool top_killed = !tm.leaks(forward, top) && is_zero(tm.matrix(forward).column(top));
  s.evidence.push_back(std::string(gen_name(forward)) + "(" + tm.labels[top] + ") " +
                       (top_killed ? "= 0" : "!= 0"));
  ok = ok && top_killed;

  bool j_closed = true;
  std::vector<Vec> j_vecs;
  for (std::size_t c = 0; c < jdim; ++c) {
    j_vecs.push_back(unit(tm.dim(), c));
    for (Gen g : {Gen::E, Gen::F}) {
      if (tm.leaks(g, c)) j_closed = false;
      for (std::size_t r = jdim; r < tm.dim(); ++r)
        if (!tm.matrix(g)(r, c).is_zero()) j_closed = false;
    }
  }
  ok = ok && j_closed;

  const auto sv = find_singular_vectors(tm, o);
  s.evidence.push_back(std::string(orientation_name(o)) + " weight vectors: " + list_singular(sv));
  bool j_simple = false;
  if (sv.size() == 2) {
    s.weight = sv[0].weight;
    const Subspace gen = generated_submodule(tm, {sv[0].vector});
    j_simple = gen.size() == jdim;
    for (const auto& v : j_vecs) j_simple = j_simple && gen.contains(v);
    ok = ok && sv[1].weight == quotient_weight;
  }
  s.evidence.push_back(j_closed && j_simple ? "J = span of the first " + std::to_string(jdim) +
                                                  " basis vectors is simple"
                                            : "J is not a simple submodule");
  ok = ok && j_simple;

  s.evidence.push_back("non-split: " + cert.statement());
  ok = ok && cert.valid();

  VermaMatch vm;
  try {
    vm = match_verma(tm, j_vecs, {quotient_weight, o, window});
  } catch (const std::exception& ex) {
    vm.reason = ex.what();
  }
  s.evidence.push_back("V/J vs Verma(" + quotient_weight.str() + "): " +
                       (vm.isomorphic ? "isomorphic on " + std::to_string(window) + " vectors" : vm.reason));
  s.verified = ok && vm.isomorphic;
  return s;
}

Summand verma_summand(const Action& action, BasisDescription desc, Orientation o, const Scalar& lambda,
                      std::size_t window, SliceMode mode) {
  Summand s = make_summand(desc, SummandType::Verma, o);
  s.weight = lambda;
  s.window = window;
  s.graded = mode == SliceMode::QuotientHigher;
  const TruncatedModule tm = slice(action, desc, static_cast<std::uint32_t>(window), mode);
  const auto sv = find_singular_vectors(tm, o);
  s.evidence.push_back(std::string(orientation_name(o)) + " weight vectors: " + list_singular(sv));
  const bool simple = sv.size() == 1 && sv[0].weight == lambda && sv[0].vector[0] != Scalar(0);
  VermaMatch vm;
  try {
    vm = match_verma(tm, std::nullopt, {lambda, o, window});
  } catch (const std::exception& ex) {
    vm.reason = ex.what();
  }
  s.evidence.push_back("Verma(" + lambda.str() + "): " +
                       (vm.isomorphic ? "isomorphic on " + std::to_string(window) + " vectors" : vm.reason));
  s.verified = !tm.escapes && simple && vm.isomorphic;
  return s;
}

bool partition_covers(const std::vector<Summand>& summands, std::uint32_t cutoff) {
  for (std::uint32_t d = 0; d <= cutoff; ++d)
    for (std::uint32_t i = 0; i <= d; ++i) {
      const Monomial u{d - i, i};
      int hits = 0;
      for (const auto& s : summands) hits += s.basis.contains(u) ? 1 : 0;
      if (hits != 1) return false;
    }
  return true;
}

}  // namespace

CompositionReport composition_report(const SeriesFamily& family, std::uint32_t cutoff,
                                     std::size_t verma_window) {
  if (cutoff < 4) throw InvalidSize("composition report needs cutoff >= 4");
  if (verma_window < 1) throw InvalidSize("Verma window must be >= 1");
  validate(family);
  const Action action = build(family);
  CompositionReport r;
  r.family = family;
  r.cutoff = cutoff;
  r.verma_window = verma_window;
  const std::size_t w = verma_window;

  switch (tag_of(family)) {
    case FamilyTag::Trivial:
      for (std::uint32_t d = 0; d <= cutoff; ++d)
        for (std::uint32_t i = 0; i <= d; ++i) r.summands.push_back(trivial_summand(action, {d - i, i}));
      break;
    case FamilyTag::Standard:
      for (std::uint32_t n = 0; n <= cutoff; ++n) r.summands.push_back(standard_summand(action, n));
      break;
    case FamilyTag::EB0:
    case FamilyTag::FC0: {
      const bool eb0 = tag_of(family) == FamilyTag::EB0;
      for (std::uint32_t n = 0; n <= cutoff; ++n) {
        const auto cert = non_split_certificate(action, n, 2 * n + 1);
        r.certificates.push_back(cert);
        const long shift = static_cast<long>(n) + 2;
        r.summands.push_back(series_summand(
            action, eb0 ? BasisDescription::x_power_times_y_poly(n) : BasisDescription::y_power_times_x_poly(n),
            n + 1, eb0 ? Orientation::Highest : Orientation::Lowest, Scalar::q_pow(eb0 ? -shift : shift), w,
            SliceMode::Subspace, cert));
      }
      break;
    }
    case FamilyTag::EA0:
    case FamilyTag::FD0: {
      const bool ea0 = tag_of(family) == FamilyTag::EA0;
      const auto& [s, t] = ea0 ? std::pair{std::get<family::EA0>(family).s, std::get<family::EA0>(family).t}
                               : std::pair{std::get<family::FD0>(family).s, std::get<family::FD0>(family).t};
      // With s or t nonzero the rows are not invariant, only the filtration is.
      const SliceMode mode = s.is_zero() && t.is_zero() ? SliceMode::Subspace : SliceMode::QuotientHigher;
      const Orientation o = ea0 ? Orientation::Highest : Orientation::Lowest;
      auto row = [&](std::uint32_t n) {
        return ea0 ? BasisDescription::y_power_times_x_poly(n) : BasisDescription::x_power_times_y_poly(n);
      };
      const auto cert = non_split_certificate(action, 0, 1);
      r.certificates.push_back(cert);
      r.summands.push_back(series_summand(action, row(0), 1, o, Scalar::q_pow(ea0 ? -2 : 2), w, mode, cert));
      for (std::uint32_t n = 1; n <= cutoff; ++n) {
        const long e = static_cast<long>(n);
        r.summands.push_back(verma_summand(action, row(n), o, Scalar::q_pow(ea0 ? -e : e), w, mode));
      }
      break;
    }
  }
  r.partition_ok = partition_covers(r.summands, cutoff);
  return r;
}

}  // namespace uqsl2
