#pragma once

#include "oncgl2/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oncgl2::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kronecker(const Matrix& lhs, const Matrix& rhs);

/// Sparse row: strictly increasing column indices, no zero entries.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental Gaussian elimination. Rows are kept in echelon form with unit
/// leading coefficients; reduce() brings them to reduced echelon form.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true iff the row was independent of the rows seen so far.
  bool add(SparseRow row);
  bool add_dense(const Vector& row);

  /// Reduced row echelon basis of the row space, ordered by pivot column.
  std::vector<Vector> basis() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of { x : r . x = 0 for every added row r }, one vector per free column.
  std::vector<Vector> nullspace() const;

  /// True iff v lies in the row space.
  bool contains(const Vector& v) const;

 private:
  SparseRow reduced(SparseRow row) const;
  std::map<std::size_t, SparseRow> fully_reduced() const;

  std::size_t cols_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row with leading 1
};

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& row, std::size_t cols);

std::size_t rank(const Matrix& m);
/// Right nullspace {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// RREF basis of the span of the given vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim);
bool same_span(const std::vector<Vector>& lhs, const std::vector<Vector>& rhs, std::size_t dim);

}  // namespace oncgl2::linalg
