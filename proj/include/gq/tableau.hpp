#pragma once

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"

namespace gq {

/// Multiplicities a(1..n) of the values in a tableau or column sequence.
class ContentVector {
 public:
  ContentVector() = default;
  explicit ContentVector(int n) : counts_(static_cast<std::size_t>(n), 0) {}

  int n() const { return static_cast<int>(counts_.size()); }
  int operator[](int value) const { return counts_[static_cast<std::size_t>(value - 1)]; }
  int& operator[](int value) { return counts_[static_cast<std::size_t>(value - 1)]; }
  int total() const {
    int s = 0;
    for (int c : counts_) s += c;
    return s;
  }
  const std::vector<int>& counts() const { return counts_; }

  friend bool operator==(const ContentVector&, const ContentVector&) = default;

 private:
  std::vector<int> counts_;
};

inline ContentVector content_of(std::span<const ColumnTuple> columns, int n) {
  ContentVector c(n);
  for (const auto& col : columns)
    for (int i = 0; i < col.rank(); ++i) ++c[col[i]];
  return c;
}

/// Rows weakly increase along a column sequence iff consecutive columns are
/// Bruhat-comparable in order.
inline bool is_semistandard(std::span<const ColumnTuple> columns) {
  for (std::size_t j = 1; j < columns.size(); ++j)
    if (!bruhat_leq(columns[j - 1], columns[j])) return false;
  return true;
}

/// Rectangular semistandard tableau of shape r x d over [1, n]; column j is
/// the Pluecker index of the j-th factor of the standard monomial it encodes.
class Tableau {
 public:
  Tableau() = default;

  /// Empty tableau (degree 0) of r rows.
  Tableau(int r, int n) : r_(r), n_(n) {}

  explicit Tableau(std::vector<ColumnTuple> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw ArgumentError("use Tableau(r, n) for the empty tableau");
    r_ = columns_.front().rank();
    n_ = columns_.front().n();
    for (const auto& c : columns_)
      if (c.rank() != r_ || c.n() != n_) throw ArgumentError("tableau columns must share (r, n)");
    if (!is_semistandard(columns_)) throw ArgumentError("tableau rows are not weakly increasing");
  }

  /// Canonical tableau of a commutative monomial: columns sorted ascending.
  static Tableau from_multiset(std::vector<ColumnTuple> columns, int r, int n) {
    if (columns.empty()) return Tableau(r, n);
    std::sort(columns.begin(), columns.end());
    return Tableau(std::move(columns));
  }

  static Tableau from_rows(int n, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw ArgumentError("tableau needs at least one row");
    const std::size_t d = rows.front().size();
    for (const auto& row : rows)
      if (row.size() != d) throw ArgumentError("tableau rows must have equal length");
    if (d == 0) return Tableau(static_cast<int>(rows.size()), n);
    std::vector<ColumnTuple> cols;
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<int> e;
      for (const auto& row : rows) e.push_back(row[j]);
      cols.emplace_back(n, e);
    }
    return Tableau(std::move(cols));
  }

  int rows() const { return r_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  int n() const { return n_; }
  bool empty() const { return columns_.empty(); }

  /// 0-based cell access.
  int at(int row, int col) const { return columns_[static_cast<std::size_t>(col)][row]; }
  const ColumnTuple& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  const std::vector<ColumnTuple>& columns() const& { return columns_; }
  std::vector<ColumnTuple> columns() && { return std::move(columns_); }

  std::vector<int> row(int i) const {
    std::vector<int> out;
    out.reserve(columns_.size());
    for (const auto& c : columns_) out.push_back(c[i]);
    return out;
  }

  ContentVector content() const { return content_of(columns_, n_); }

  /// Rows joined by '/', e.g. "1112223/3344455/5666777" (values < 10) or
  /// space-separated when larger values occur.
  std::string to_string() const {
    bool wide = n_ >= 10;
    std::string s;
    for (int i = 0; i < r_; ++i) {
      if (i) s += "/";
      for (int j = 0; j < cols(); ++j) {
        if (wide && j) s += " ";
        s += std::to_string(at(i, j));
      }
    }
    return s;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  int r_ = 0;
  int n_ = 0;
  std::vector<ColumnTuple> columns_;
};

}  // namespace gq
