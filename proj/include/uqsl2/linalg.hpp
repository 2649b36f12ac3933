// Dense linear algebra over Q(q). Sizes here are tens, not thousands.
#pragma once

#include "uqsl2/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace uqsl2 {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);
  bool is_zero() const;
  bool is_diagonal() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

bool is_zero(const Vec& v);

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of the null space, one vector per free column.
std::vector<Vec> kernel(Matrix m);

/// Subspace of Q(q)^n kept as a fully reduced echelon basis, so reduce() is a
/// linear projection onto the coordinates that are not pivots.
class Subspace {
 public:
  explicit Subspace(std::size_t dim) : dim_(dim) {}

  std::size_t ambient() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t i) const;

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  /// Adds v; false if it was already in the span.
  bool add(const Vec& v);

 private:
  std::size_t dim_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace uqsl2
