#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gq/errors.hpp"
#include "gq/rational.hpp"

namespace gq {

/// Dense row-major matrix over any commutative ring with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw ArgumentError("negative matrix dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) throw ArgumentError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const { return data_[index(i, j)]; }

  Matrix submatrix(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
    Matrix out(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (std::size_t i = 0; i < row_ids.size(); ++i)
      for (std::size_t j = 0; j < col_ids.size(); ++j)
        out(static_cast<int>(i), static_cast<int>(j)) = (*this)(row_ids[i], col_ids[j]);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k)
        for (int j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> row_reduce(QMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < a.cols() && row < a.rows(); ++c) {
    int p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rational inv = 1 / a(row, c);
    for (int j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline int rank(QMatrix a) { return static_cast<int>(row_reduce(a).size()); }

inline Rational determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw ArgumentError("determinant of a non-square matrix");
  const int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to 0.
inline std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw ArgumentError("right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> piv = row_reduce(aug);
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == a.cols()) return std::nullopt;
    x[static_cast<std::size_t>(piv[k])] = aug(static_cast<int>(k), a.cols());
  }
  return x;
}

/// Division-free determinant by Laplace expansion along the first row, for
/// small matrices over rings such as polynomial rings.
template <class T>
T laplace_determinant(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw ArgumentError("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) throw ArgumentError("empty determinant");
  if (n == 1) return a(0, 0);
  T total{};
  std::vector<int> rows;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    if (a(0, j) == T{}) continue;
    std::vector<int> cols;
    for (int k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    T term = a(0, j) * laplace_determinant(a.submatrix(rows, cols));
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace gq
