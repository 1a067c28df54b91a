#pragma once

// Dense exact linear algebra over a Field: echelon forms, kernels, determinants, subspaces.

#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

inline Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v[i] = f.one();
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

inline Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector scale(Vector v, const Scalar& a) {
  for (auto& x : v) x *= a;
  return v;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }

  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vector column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!o(k, j).is_zero()) out(i, j) += a * o(k, j);
      }
    return out;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) fail(ErrorCode::ShapeMismatch, "matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix rows;                      // reduced rows, one per pivot
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form. Columns are searched for pivots in `column_order`
// (all columns in natural order when empty), which decides which coordinates become pivots.
inline Echelon rref(Matrix m, std::span<const std::size_t> column_order = {}) {
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  }
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == m.rows()) break;
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(f, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Basis of {x : m x = 0}.
inline std::vector<Vector> kernel(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  const Field& f = m.field();
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, m.cols(), free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const Field f = m.field();
  Scalar det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
  return inv;
}

inline Matrix matrix_power(const Matrix& m, std::uint64_t e) {
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

// Subspace of k^n stored as reduced echelon rows.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), echelon_{Matrix(f, 0, ambient), {}} {}

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors,
                       std::span<const std::size_t> column_order = {}) {
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    s.echelon_ = rref(Matrix::from_rows(f, ambient, vectors), column_order);
    return s;
  }

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return echelon_.pivots.size(); }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots; }

  std::vector<Vector> basis() const {
    std::vector<Vector> b;
    for (std::size_t i = 0; i < dim(); ++i) b.push_back(echelon_.rows.row(i));
    return b;
  }

  // v minus the element of the subspace sharing its pivot coordinates
  Vector reduce(Vector v) const {
    for (std::size_t i = 0; i < dim(); ++i) {
      Scalar c = v[echelon_.pivots[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!echelon_.rows(i, j).is_zero()) v[j] -= c * echelon_.rows(i, j);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  bool operator==(const Subspace& o) const {
    if (dim() != o.dim()) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!o.contains(echelon_.rows.row(i))) return false;
    return true;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Echelon echelon_;
};

// Coordinates with respect to a fixed list of linearly independent vectors.
class Coordinatizer {
 public:
  Coordinatizer(const Field& f, std::size_t ambient, std::vector<Vector> vectors)
      : field_(f), ambient_(ambient), vectors_(std::move(vectors)) {
    const std::size_t m = vectors_.size();
    // rows = ambient coordinates, columns = vectors; find m independent coordinate rows
    Matrix tall = Matrix::from_columns(f, ambient, vectors_);
    Echelon e = rref(tall.transpose());
    if (e.pivots.size() != m) fail(ErrorCode::InvalidAlgebra, "coordinatizer: vectors are dependent");
    rows_ = e.pivots;
    Matrix square(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) square(i, j) = vectors_[j][rows_[i]];
    auto inv = inverse(square);
    if (!inv) fail(ErrorCode::InvalidAlgebra, "coordinatizer: singular selection");
    inverse_ = std::move(*inv);
  }

  std::size_t size() const { return vectors_.size(); }

  std::optional<Vector> try_coordinates(const Vector& w) const {
    const std::size_t m = vectors_.size();
    Vector selected;
    selected.reserve(m);
    for (auto r : rows_) selected.push_back(w[r]);
    Vector c = inverse_.apply(selected);
    Vector back = zero_vector(field_, ambient_);
    for (std::size_t j = 0; j < m; ++j) axpy(back, c[j], vectors_[j]);
    if (back != w) return std::nullopt;
    return c;
  }

  Vector coordinates(const Vector& w) const {
    auto c = try_coordinates(w);
    if (!c) fail(ErrorCode::VerificationFailed, "vector not in the coordinatized span");
    return *c;
  }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> rows_;
  Matrix inverse_;
};

}  // namespace qalg
