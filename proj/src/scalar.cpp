#include "uqsl2/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace uqsl2 {

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& c) {
  if (sgn(c) < 0) return std::nullopt;
  if (mpz_perfect_square_p(c.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(c.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), c.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), c.get_den_mpz_t());
  return mpq_class(n, d);
}

std::string coeff_text(const mpq_class& c) { return c.get_str(); }

}  // namespace

// --- QPoly -------------------------------------------------------------------

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly QPoly::monomial(const mpq_class& c, std::size_t exponent) {
  if (sgn(c) == 0) return {};
  std::vector<mpq_class> v(exponent + 1);
  v[exponent] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

mpq_class QPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : mpq_class(0);
}

std::size_t QPoly::valuation() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && sgn(coeffs_[k]) == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

bool QPoly::is_monomial() const {
  return !coeffs_.empty() && valuation() + 1 == coeffs_.size();
}

QPoly QPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  if (k >= coeffs_.size()) return {};
  return QPoly(std::vector<mpq_class>(coeffs_.begin() + static_cast<long>(k),
                                      coeffs_.end()));
}

QPoly QPoly::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  std::vector<mpq_class> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::scaled(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  std::vector<mpq_class> v(coeffs_);
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

mpq_class QPoly::eval(const mpq_class& at) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * at + *it;
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  std::vector<mpq_class> v(big.coeffs_);
  for (std::size_t i = 0; i < small.coeffs_.size(); ++i) v[i] += small.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
  std::vector<mpq_class> v(coeffs_);
  for (auto& x : v) x = -x;
  QPoly r;
  r.coeffs_ = std::move(v);
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& n, const QPoly& d, QPoly& quot, QPoly& rem) {
  if (d.is_zero()) throw DivisionByZero();
  rem = n;
  quot = QPoly();
  const std::size_t dd = d.coeffs_.size() - 1;
  if (n.coeffs_.size() <= dd) return;
  std::vector<mpq_class> q(n.coeffs_.size() - dd);
  std::vector<mpq_class> r(n.coeffs_);
  for (std::size_t k = r.size(); k-- > dd;) {
    if (sgn(r[k]) == 0) continue;
    mpq_class c = r[k] / d.leading();
    q[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] -= c * d.coeffs_[j];
  }
  quot = QPoly(std::move(q));
  rem = QPoly(std::move(r));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly quot;
    QPoly rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / mpq_class(a.leading()));
}

std::optional<QPoly> QPoly::sqrt() const {
  if (is_zero()) return QPoly();
  const std::size_t d = coeffs_.size() - 1;
  if (d % 2 != 0) return std::nullopt;
  auto top = rational_sqrt(leading());
  if (!top) return std::nullopt;
  const std::size_t h = d / 2;
  QPoly root = monomial(*top, h);
  for (std::size_t k = h; k-- > 0;) {
    QPoly residual = *this - root * root;
    mpq_class c = residual.coeff(h + k) / (2 * *top);
    root = root + monomial(c, k);
  }
  if (root * root != *this) return std::nullopt;
  return root;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (k == 0) {
      os << coeff_text(mag);
      continue;
    }
    if (mag != 1) os << coeff_text(mag) << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// --- Scalar ------------------------------------------------------------------

Scalar::Scalar(long c) : num_(c), den_(1) {}

Scalar::Scalar(const mpq_class& c) : num_(QPoly::monomial(c, 0)), den_(1) {}

Scalar::Scalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

Scalar Scalar::q_pow(long k) {
  Scalar s;
  if (k >= 0) {
    s.num_ = QPoly::monomial(1, static_cast<std::size_t>(k));
  } else {
    s.num_ = QPoly(1);
    s.den_ = QPoly::monomial(1, static_cast<std::size_t>(-k));
  }
  return s;
}

void Scalar::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  const std::size_t v = std::min(num_.valuation(), den_.valuation());
  num_ = num_.shifted_down(v);
  den_ = den_.shifted_down(v);
  if (!num_.is_monomial() && !den_.is_monomial()) {
    QPoly g = QPoly::gcd(num_, den_);
    if (*g.degree() > 0) {
      QPoly quot;
      QPoly rem;
      QPoly::divmod(num_, g, quot, rem);
      num_ = std::move(quot);
      QPoly::divmod(den_, g, quot, rem);
      den_ = std::move(quot);
    }
  }
  // Scale so the denominator is a primitive integer polynomial with
  // positive leading coefficient.
  mpz_class lcm_den = 1;
  for (const auto& c : den_.coeffs())
    if (sgn(c) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& c : den_.coeffs()) {
    if (sgn(c) == 0) continue;
    mpz_class scaled_num = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled_num.get_mpz_t());
  }
  mpq_class factor(lcm_den, content);
  factor.canonicalize();
  if (sgn(den_.leading()) < 0) factor = -factor;
  if (factor != 1) {
    num_ = num_.scaled(factor);
    den_ = den_.scaled(factor);
  }
}

bool Scalar::is_one() const { return den_ == QPoly(1) && num_ == QPoly(1); }

bool Scalar::is_laurent_monomial() const {
  return !is_zero() && num_.is_monomial() && den_.is_monomial();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::optional<Scalar> Scalar::sqrt() const {
  auto n = num_.sqrt();
  auto d = den_.sqrt();
  if (!n || !d) return std::nullopt;
  return Scalar(*n, *d);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool Scalar::is_atomic() const {
  if (den_ != QPoly(1)) return false;
  return num_.is_zero() || num_.is_monomial();
}

std::string Scalar::str() const {
  if (den_ == QPoly(1)) return num_.str();
  auto wrap = [](const QPoly& p) {
    std::string s = p.str();
    bool single = p.is_monomial() && (p.leading() == 1 || p.valuation() == 0) &&
                  s.find('/') == std::string::npos;
    return single ? s : "(" + s + ")";
  };
  std::string n = num_.str();
  if (!num_.is_monomial() || n.find('/') != std::string::npos) n = "(" + n + ")";
  return n + "/" + wrap(den_);
}

// --- free functions ----------------------------------------------------------

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

Scalar quantum_integer(long n) {
  if (n == 0) return Scalar();
  if (n < 0) return -quantum_integer(-n);
  // q^(1-n) * (1 + q^2 + ... + q^(2n-2))
  std::vector<mpq_class> c(2 * static_cast<std::size_t>(n) - 1);
  for (long j = 0; j < n; ++j) c[2 * static_cast<std::size_t>(j)] = 1;
  return Scalar(QPoly(std::move(c)), QPoly::monomial(1, static_cast<std::size_t>(n - 1)));
}

std::optional<mpq_class> eval_at_one(const Scalar& a) {
  mpq_class d = a.den().eval(1);
  if (sgn(d) == 0) return std::nullopt;
  return mpq_class(a.num().eval(1) / d);
}

std::optional<long> as_q_power(const Scalar& a, long bound) {
  if (!a.is_laurent_monomial()) return std::nullopt;
  if (a.num().leading() != 1 || a.den().leading() != 1) return std::nullopt;
  long k = static_cast<long>(*a.num().degree()) - static_cast<long>(*a.den().degree());
  if (std::labs(k) > bound) return std::nullopt;
  return k;
}

}  // namespace uqsl2
