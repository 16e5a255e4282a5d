#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gq/errors.hpp"
#include "gq/permutation.hpp"

namespace gq {

/// Strictly increasing r-tuple in [1, n]: a Pluecker index, a column of a
/// tableau, and a minimal coset representative of S_n / (S_r x S_{n-r}).
///
/// Ordering (operator<=>) is lexicographic on the entries for a fixed (r, n);
/// this is the column order used for canonical tableaux. Bruhat order is the
/// separate componentwise relation `bruhat_leq`.
class ColumnTuple {
 public:
  static constexpr int kMaxRank = 12;
  static constexpr int kMaxN = 255;

  ColumnTuple() = default;

  ColumnTuple(int n, std::span<const int> entries) {
    if (n < 1 || n > kMaxN) throw ArgumentError("alphabet bound n out of range");
    if (entries.empty() || static_cast<int>(entries.size()) > kMaxRank ||
        static_cast<int>(entries.size()) > n)
      throw ArgumentError("column rank out of range");
    r_ = static_cast<std::uint8_t>(entries.size());
    n_ = static_cast<std::uint8_t>(n);
    int prev = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      int x = entries[i];
      if (x <= prev || x > n) throw ArgumentError("column entries must be strictly increasing in [1, n]");
      entries_[i] = static_cast<std::uint8_t>(x);
      prev = x;
    }
  }

  ColumnTuple(int n, std::initializer_list<int> entries)
      : ColumnTuple(n, std::span<const int>(entries.begin(), entries.size())) {}

  ColumnTuple(int n, const std::vector<int>& entries)
      : ColumnTuple(n, std::span<const int>(entries.data(), entries.size())) {}

  /// The identity coset [1, 2, ..., r].
  static ColumnTuple identity(int r, int n) {
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return ColumnTuple(n, e);
  }

  /// The maximal tuple [n-r+1, ..., n].
  static ColumnTuple top(int r, int n) {
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = n - r + 1 + i;
    return ColumnTuple(n, e);
  }

  /// Sorted image of {1..r} under a permutation of S_n.
  static ColumnTuple project(const Permutation& w, int r) {
    std::vector<int> e;
    for (int k = 1; k <= r; ++k) e.push_back(w(k));
    std::sort(e.begin(), e.end());
    return ColumnTuple(w.size(), e);
  }

  int rank() const { return r_; }
  int n() const { return n_; }
  /// 0-based access; the i-th entry of the 1-based tuple is (*this)[i-1].
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }

  bool contains(int value) const {
    for (int i = 0; i < r_; ++i)
      if (entries_[static_cast<std::size_t>(i)] == value) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out(r_);
    for (int i = 0; i < r_; ++i) out[static_cast<std::size_t>(i)] = entries_[static_cast<std::size_t>(i)];
    return out;
  }

  /// Minimal-length permutation: entries first, then the complement ascending.
  Permutation to_permutation() const {
    std::vector<int> one_line = to_vector();
    for (int x = 1; x <= n_; ++x)
      if (!contains(x)) one_line.push_back(x);
    return Permutation(std::move(one_line));
  }

  /// Coxeter length sum_i (b_i - i).
  int length() const {
    int len = 0;
    for (int i = 0; i < r_; ++i) len += entries_[static_cast<std::size_t>(i)] - (i + 1);
    return len;
  }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
      if (i) s += ",";
      s += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
    return s + "]";
  }

  friend bool operator==(const ColumnTuple&, const ColumnTuple&) = default;
  friend auto operator<=>(const ColumnTuple&, const ColumnTuple&) = default;

 private:
  std::uint8_t r_ = 0;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxRank> entries_{};
};

inline void require_same_shape(const ColumnTuple& a, const ColumnTuple& b) {
  if (a.rank() != b.rank() || a.n() != b.n())
    throw ArgumentError("column tuples have different (r, n): " + a.to_string() + " vs " + b.to_string());
}

/// Bruhat order on I(r, n): componentwise comparison.
inline bool bruhat_leq(const ColumnTuple& u, const ColumnTuple& w) {
  require_same_shape(u, w);
  for (int i = 0; i < u.rank(); ++i)
    if (u[i] > w[i]) return false;
  return true;
}

/// All of I(r, n) in lexicographic order.
inline std::vector<ColumnTuple> all_column_tuples(int r, int n) {
  std::vector<ColumnTuple> out;
  std::vector<int> e(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == r) {
      out.emplace_back(n, e);
      return;
    }
    for (int x = lo; x <= n - (r - pos - 1); ++x) {
      e[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, x + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace gq
