#include "oncgl2/linalg.hpp"

#include <stdexcept>

namespace oncgl2::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Matrix kronecker(const Matrix& lhs, const Matrix& rhs) {
  Matrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) == 0) continue;
      for (std::size_t k = 0; k < rhs.rows(); ++k)
        for (std::size_t l = 0; l < rhs.cols(); ++l)
          out(i * rhs.rows() + k, j * rhs.cols() + l) = lhs(i, j) * rhs(k, l);
    }
  return out;
}

SparseRow to_sparse(const Vector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) row.emplace_back(i, v[i]);
  return row;
}

Vector to_dense(const SparseRow& row, std::size_t cols) {
  Vector v(cols);
  for (const auto& [c, x] : row) v[c] = x;
  return v;
}

namespace {

// target -= factor * source, both sorted.
SparseRow axpy(const SparseRow& target, const Rational& factor, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->first < s->first)) {
      out.push_back(*t++);
    } else if (t == target.end() || s->first < t->first) {
      out.emplace_back(s->first, -factor * s->second);
      ++s;
    } else {
      Rational x = t->second - factor * s->second;
      if (x != 0) out.emplace_back(t->first, std::move(x));
      ++t;
      ++s;
    }
  }
  return out;
}

}  // namespace

SparseRow RowEchelon::reduced(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    auto it = rows_.find(row[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rational factor = row[pos].second;
    row = axpy(row, factor, it->second);
  }
  return row;
}

bool RowEchelon::add(SparseRow row) {
  for (const auto& [c, x] : row)
    if (c >= cols_) throw std::out_of_range("RowEchelon::add: column out of range");
  row = reduced(std::move(row));
  if (row.empty()) return false;
  Rational lead = row.front().second;
  for (auto& entry : row) entry.second /= lead;
  std::size_t pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

bool RowEchelon::add_dense(const Vector& row) {
  if (row.size() != cols_) throw std::invalid_argument("RowEchelon::add_dense: wrong length");
  return add(to_sparse(row));
}

std::map<std::size_t, SparseRow> RowEchelon::fully_reduced() const {
  std::map<std::size_t, SparseRow> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseRow row = it->second;
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto p = done.find(row[pos].first);
      if (p == done.end()) {
        ++pos;
        continue;
      }
      Rational factor = row[pos].second;
      row = axpy(row, factor, p->second);
    }
    done.emplace(it->first, std::move(row));
  }
  return done;
}

std::vector<Vector> RowEchelon::basis() const {
  std::vector<Vector> out;
  for (const auto& [pivot, row] : fully_reduced()) out.push_back(to_dense(row, cols_));
  return out;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

std::vector<Vector> RowEchelon::nullspace() const {
  auto rref = fully_reduced();
  std::vector<Vector> out;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (rref.count(free)) continue;
    Vector v(cols_);
    v[free] = 1;
    for (const auto& [pivot, row] : rref)
      for (const auto& [c, x] : row)
        if (c == free) v[pivot] = -x;
    out.push_back(std::move(v));
  }
  return out;
}

bool RowEchelon::contains(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowEchelon::contains: wrong length");
  return reduced(to_sparse(v)).empty();
}

std::size_t rank(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_dense(m.row(r));
  return e.rank();
}

std::vector<Vector> nullspace(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add_dense(m.row(r));
  return e.nullspace();
}

std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  RowEchelon e(dim);
  for (const auto& v : vectors) e.add_dense(v);
  return e.basis();
}

bool same_span(const std::vector<Vector>& lhs, const std::vector<Vector>& rhs, std::size_t dim) {
  return span_basis(lhs, dim) == span_basis(rhs, dim);
}

}  // namespace oncgl2::linalg
