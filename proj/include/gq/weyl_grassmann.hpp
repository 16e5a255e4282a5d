#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"
#include "gq/permutation.hpp"
#include "gq/tableau.hpp"

namespace gq {

/// Word s_{i1} ... s_{im} in the simple reflections of S_n, required to be reduced.
class ReducedWord {
 public:
  ReducedWord() = default;

  ReducedWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
    for (int i : letters_)
      if (i < 1 || i >= n_) throw ArgumentError("letter out of range for S_" + std::to_string(n_));
    if (evaluate().length() != static_cast<int>(letters_.size()))
      throw ArgumentError("word " + to_string() + " is not reduced");
  }

  int n() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const& { return letters_; }
  std::vector<int> letters() && { return std::move(letters_); }
  int operator[](int pos) const { return letters_[static_cast<std::size_t>(pos)]; }

  Permutation evaluate() const { return Permutation::from_word(n_, letters_); }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      if (k) s += " ";
      s += "s" + std::to_string(letters_[k]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  int n_ = 0;
  std::vector<int> letters_;
};

/// Weight of the diagonal torus of SL_n. The epsilon coordinates are the
/// source of truth; simple-root (alpha) coordinates are their partial sums.
class Weight {
 public:
  Weight() = default;

  explicit Weight(std::vector<long long> eps) : eps_(std::move(eps)) {
    if (std::accumulate(eps_.begin(), eps_.end(), 0LL) != 0)
      throw ArgumentError("epsilon coordinates of a weight must sum to zero");
  }

  /// Inverse of alpha(): lambda = sum_i c_i alpha_i with alpha_i = e_i - e_{i+1}.
  static Weight from_alpha(const std::vector<long long>& alpha) {
    std::vector<long long> eps(alpha.size() + 1, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      eps[i] += alpha[i];
      eps[i + 1] -= alpha[i];
    }
    return Weight(std::move(eps));
  }

  const std::vector<long long>& eps() const { return eps_; }

  std::vector<long long> alpha() const {
    std::vector<long long> out;
    long long partial = 0;
    for (std::size_t i = 0; i + 1 < eps_.size(); ++i) {
      partial += eps_[i];
      out.push_back(partial);
    }
    return out;
  }

  /// Sum of the simple-root coordinates.
  long long height() const {
    long long h = 0;
    for (long long c : alpha()) h += c;
    return h;
  }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::vector<long long> eps_;
};

namespace detail {

inline void require_coprime(int r, int n) {
  if (r < 1 || r >= n) throw ArgumentError("need 1 <= r < n");
  if (std::gcd(r, n) != 1)
    throw UnsupportedInput("gcd(r, n) = " + std::to_string(std::gcd(r, n)) + " != 1 is not supported");
}

/// Smallest a with a * r >= i * n.
inline int ceil_ratio(int i, int n, int r) { return (i * n + r - 1) / r; }

}  // namespace detail

/// Minimal Schubert element w_{r,n} = (a_1, ..., a_r), a_i = ceil(i n / r).
inline ColumnTuple minimal_schubert(int r, int n) {
  detail::require_coprime(r, n);
  std::vector<int> a;
  for (int i = 1; i <= r; ++i) a.push_back(detail::ceil_ratio(i, n, r));
  return ColumnTuple(n, a);
}

/// Minimal opposite element v_{r,n} = [1, a_1, ..., a_{r-1}].
inline ColumnTuple minimal_richardson_v(int r, int n) {
  detail::require_coprime(r, n);
  std::vector<int> v{1};
  for (int i = 1; i < r; ++i) v.push_back(detail::ceil_ratio(i, n, r));
  return ColumnTuple(n, v);
}

/// Gamma_{r,n}: the r x n tableau filled left to right, top to bottom with
/// 1, ..., n, each value repeated r times.
inline Tableau gamma_tableau(int r, int n) {
  detail::require_coprime(r, n);
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i * n + j) / r + 1;
  return Tableau::from_rows(n, rows);
}

/// (s_{b1-1} ... s_1)(s_{b2-1} ... s_2) ... (s_{br-1} ... s_r); a bracket is
/// empty when b_i - 1 < i.
inline ReducedWord canonical_word(const ColumnTuple& c) {
  std::vector<int> letters;
  for (int i = 1; i <= c.rank(); ++i)
    for (int k = c[i - 1] - 1; k >= i; --k) letters.push_back(k);
  return ReducedWord(c.n(), std::move(letters));
}

/// Whether w v^{-1} is a Coxeter element of S_n (every simple reflection
/// exactly once in a reduced word).
inline bool is_coxeter_quotient(const ColumnTuple& w, const ColumnTuple& v) {
  if (!bruhat_leq(v, w)) throw ArgumentError("v = " + v.to_string() + " is not below w = " + w.to_string());
  const int n = w.n();
  Permutation c = w.to_permutation() * v.to_permutation().inverse();
  if (c.length() != n - 1) return false;
  std::vector<int> uses(static_cast<std::size_t>(n), 0);
  for (int i : c.reduced_word()) ++uses[static_cast<std::size_t>(i)];
  for (int i = 1; i < n; ++i)
    if (uses[static_cast<std::size_t>(i)] != 1) return false;
  return true;
}

/// v(n omega_r) in epsilon coordinates: n - r at positions v(1..r), -r elsewhere.
inline Weight orbit_weight(const ColumnTuple& v) {
  const int n = v.n();
  const int r = v.rank();
  std::vector<long long> eps(static_cast<std::size_t>(n), -r);
  for (int i = 0; i < r; ++i) eps[static_cast<std::size_t>(v[i] - 1)] = n - r;
  return Weight(std::move(eps));
}

/// ht v(n omega_r): the degree of a section restricted to the open Deodhar cell.
inline long long restriction_height(const ColumnTuple& v) { return orbit_weight(v).height(); }

}  // namespace gq
