#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"
#include "gq/g37.hpp"
#include "gq/tableau.hpp"

namespace gq {

/// A standard monomial is a torus weight-zero vector iff every value occurs
/// equally often in its tableau.
inline bool is_zero_weight(const Tableau& t) {
  if (t.empty()) return true;
  const ContentVector c = t.content();
  for (int x = 1; x <= t.n(); ++x)
    if (c[x] != c[1]) return false;
  return true;
}

namespace detail {

class InvariantEnumerator {
 public:
  InvariantEnumerator(int r, int n, int m, const ColumnTuple& w, const ColumnTuple& v)
      : r_(r), n_(n), d_(m * n), target_(r * m), w_(w), remaining_(n) {
    for (const auto& c : all_column_tuples(r, n))
      if (bruhat_leq(v, c) && bruhat_leq(c, w)) candidates_.push_back(c);
    for (int x = 1; x <= n; ++x) remaining_[x] = target_;
  }

  void run(const std::function<void(const std::vector<ColumnTuple>&)>& visit) {
    visit_ = &visit;
    chosen_.clear();
    if (d_ == 0) {
      visit(chosen_);
      return;
    }
    descend(0);
  }

 private:
  bool feasible(const ColumnTuple& last, int k) const {
    int below = 0;
    for (int x = 1; x <= n_; ++x) {
      const int rem = remaining_[x];
      if (rem < 0 || rem > k) return false;
      below += rem;
      int rows_open = 0;
      for (int i = 0; i < r_; ++i)
        if (last[i] <= x) ++rows_open;
      if (below > k * rows_open) return false;
    }
    int above = 0;
    for (int x = n_; x >= 1; --x) {
      above += remaining_[x];
      int rows_open = 0;
      for (int i = 0; i < r_; ++i)
        if (w_[i] >= x) ++rows_open;
      if (above > k * rows_open) return false;
    }
    return true;
  }

  void descend(std::size_t start) {
    const int k = d_ - static_cast<int>(chosen_.size()) - 1;
    for (std::size_t ci = start; ci < candidates_.size(); ++ci) {
      const ColumnTuple& c = candidates_[ci];
      if (!chosen_.empty() && !bruhat_leq(chosen_.back(), c)) continue;
      for (int i = 0; i < r_; ++i) --remaining_[c[i]];
      if (feasible(c, k)) {
        chosen_.push_back(c);
        if (k == 0) (*visit_)(chosen_);
        else descend(ci);
        chosen_.pop_back();
      }
      for (int i = 0; i < r_; ++i) ++remaining_[c[i]];
    }
  }

  int r_, n_, d_, target_;
  ColumnTuple w_;
  ContentVector remaining_;
  std::vector<ColumnTuple> candidates_;
  std::vector<ColumnTuple> chosen_;
  const std::function<void(const std::vector<ColumnTuple>&)>* visit_ = nullptr;
};

}  // namespace detail

/// Visits every semistandard r x (m n) tableau in which each value of [1, n]
/// occurs r m times, whose first column is >= v and last column <= w, in
/// column-lexicographic order.
inline void for_each_invariant(int r, int n, int m, const ColumnTuple& w, const ColumnTuple& v,
                               const std::function<void(const Tableau&)>& visit) {
  require_same_shape(w, v);
  if (w.rank() != r || w.n() != n) throw ArgumentError("bounds do not live in I(r, n)");
  if (m < 0) throw ArgumentError("degree must be nonnegative");
  if (!bruhat_leq(v, w)) return;
  detail::InvariantEnumerator e(r, n, m, w, v);
  e.run([&](const std::vector<ColumnTuple>& cols) {
    visit(cols.empty() ? Tableau(r, n) : Tableau(cols));
  });
}

inline std::vector<Tableau> enumerate_invariants(int r, int n, int m, const ColumnTuple& w,
                                                 const ColumnTuple& v) {
  std::vector<Tableau> out;
  for_each_invariant(r, n, m, w, v, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

inline std::size_t count_invariants(int r, int n, int m, const ColumnTuple& w, const ColumnTuple& v) {
  std::size_t count = 0;
  for_each_invariant(r, n, m, w, v, [&](const Tableau&) { ++count; });
  return count;
}

inline ColumnTuple first_column_class(const Tableau& t) {
  if (t.empty()) throw ArgumentError("empty tableau has no first column");
  return t.column(0);
}

/// Column multiset of an invariant of X(w_{3,7}) with the structural
/// predicates every such tableau satisfies.
class ColumnCensus {
 public:
  explicit ColumnCensus(const Tableau& t) : degree_(t.cols() / g37::kN) {
    for (const auto& c : t.columns()) ++counts_[c];
    if (!t.empty()) first_ = t.column(0), last_ = t.column(t.cols() - 1);
  }

  int degree() const { return degree_; }
  int count(const ColumnTuple& c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
  }
  const std::map<ColumnTuple, int>& counts() const { return counts_; }

  static const std::vector<ColumnTuple>& allowed_first_columns() {
    static const std::vector<ColumnTuple> cols = {g37::col(1, 2, 3), g37::col(1, 2, 4), g37::col(1, 2, 5),
                                                  g37::col(1, 3, 4), g37::col(1, 3, 5)};
    return cols;
  }
  static const std::vector<ColumnTuple>& forbidden_columns() {
    static const std::vector<ColumnTuple> cols = {
        g37::col(1, 2, 7), g37::col(1, 3, 7), g37::col(1, 4, 7), g37::col(1, 5, 6), g37::col(1, 5, 7),
        g37::col(2, 3, 4), g37::col(2, 3, 5), g37::col(2, 3, 6), g37::col(2, 3, 7), g37::col(2, 4, 5),
        g37::col(2, 5, 6), g37::col(3, 4, 6), g37::col(3, 5, 6)};
    return cols;
  }

  bool first_column_allowed() const {
    for (const auto& c : allowed_first_columns())
      if (first_ == c) return true;
    return false;
  }
  bool ends_with_w() const { return last_ == g37::w(); }
  bool forbidden_absent() const {
    for (const auto& c : forbidden_columns())
      if (count(c) != 0) return false;
    return true;
  }
  /// Columns with a 6 are among [1,2,6], [1,3,6], [1,4,6], [2,4,6].
  bool sixes_confined() const { return confined(6, {g37::col(1, 2, 6), g37::col(1, 3, 6), g37::col(1, 4, 6), g37::col(2, 4, 6)}); }
  /// Columns with a 7 are among [2,4,7], [2,5,7], [3,4,7], [3,5,7].
  bool sevens_confined() const { return confined(7, {g37::col(2, 4, 7), g37::col(2, 5, 7), g37::col(3, 4, 7), g37::col(3, 5, 7)}); }
  bool count_246_is_m() const { return count(g37::col(2, 4, 6)) == degree_; }
  bool count_146_at_least_m() const { return count(g37::col(1, 4, 6)) >= degree_; }
  /// Read as a combined count of [2,5,7] and [3,5,7].
  bool count_x57_at_least_2m() const {
    return count(g37::col(2, 5, 7)) + count(g37::col(3, 5, 7)) >= 2 * degree_;
  }

  /// Names of the predicates that fail; empty when all hold.
  std::vector<std::string> failures() const {
    std::vector<std::string> f;
    if (!first_column_allowed()) f.push_back("first-column");
    if (!ends_with_w()) f.push_back("last-column");
    if (!forbidden_absent()) f.push_back("forbidden-column");
    if (!sixes_confined()) f.push_back("six-columns");
    if (!sevens_confined()) f.push_back("seven-columns");
    if (!count_246_is_m()) f.push_back("count[2,4,6]=m");
    if (!count_146_at_least_m()) f.push_back("count[1,4,6]>=m");
    if (!count_x57_at_least_2m()) f.push_back("count[2,5,7]+[3,5,7]>=2m");
    return f;
  }

 private:
  bool confined(int value, const std::vector<ColumnTuple>& allowed) const {
    for (const auto& [c, k] : counts_) {
      if (!c.contains(value)) continue;
      bool ok = false;
      for (const auto& a : allowed) ok = ok || (a == c);
      if (!ok) return false;
    }
    return true;
  }

  int degree_;
  std::map<ColumnTuple, int> counts_;
  ColumnTuple first_, last_;
};

inline ColumnCensus column_census(const Tableau& t) { return ColumnCensus(t); }

/// Degree-lexicographic order: more columns is greater; otherwise the first
/// differing column decides, columns compared lexicographically.
inline std::strong_ordering deglex_compare(const Tableau& s, const Tableau& t) {
  if (s.rows() != t.rows()) throw ArgumentError("deglex_compare needs tableaux with equal row counts");
  if (auto c = s.cols() <=> t.cols(); c != 0) return c;
  for (int j = 0; j < s.cols(); ++j)
    if (auto c = s.column(j) <=> t.column(j); c != 0) return c;
  return std::strong_ordering::equal;
}

struct FactorWitness {
  std::string tag;  // "y1".."y7" or "z20"
  Tableau factor;
  Tableau complement;
};

namespace detail {

/// Removes the columns of `part` from `whole` if `part` is a sub-multiset.
inline std::optional<std::vector<ColumnTuple>> remove_submultiset(const Tableau& whole, const Tableau& part) {
  std::map<ColumnTuple, int> counts;
  for (const auto& c : whole.columns()) ++counts[c];
  for (const auto& c : part.columns())
    if (--counts[c] < 0) return std::nullopt;
  std::vector<ColumnTuple> rest;
  for (const auto& [c, k] : counts)
    for (int i = 0; i < k; ++i) rest.push_back(c);
  return rest;
}

}  // namespace detail

/// Splits an invariant of X(w_{3,7}) of degree m >= 2 as y_i times a degree
/// m-1 invariant, or as z20 times a degree m-2 invariant, by exhaustive
/// sub-multiset search (y1..y7 first).
inline FactorWitness factor_lemma_witness(const Tableau& t) {
  if (t.rows() != g37::kRank || t.n() != g37::kN || t.cols() % g37::kN != 0)
    throw ArgumentError("factor_lemma_witness expects a 3 x 7m tableau over [1,7]");
  const int m = t.cols() / g37::kN;
  if (m < 2) throw ArgumentError("factor_lemma_witness expects degree m >= 2");

  auto accept = [&](const Tableau& part, std::vector<ColumnTuple> rest, const std::string& tag)
      -> std::optional<FactorWitness> {
    Tableau comp = Tableau::from_multiset(std::move(rest), g37::kRank, g37::kN);
    if (!is_zero_weight(comp)) return std::nullopt;
    if (!comp.empty() && !(comp.column(comp.cols() - 1) == g37::w())) return std::nullopt;
    return FactorWitness{tag, part, std::move(comp)};
  };

  for (int i = 1; i <= 7; ++i) {
    Tableau yi = g37::y(i);
    if (auto rest = detail::remove_submultiset(t, yi))
      if (auto wit = accept(yi, std::move(*rest), "y" + std::to_string(i))) return *wit;
  }
  Tableau z = g37::z20();
  if (auto rest = detail::remove_submultiset(t, z))
    if (auto wit = accept(z, std::move(*rest), "z20")) return *wit;
  throw InvariantViolation("no y_i or z20 factor found in " + t.to_string());
}

}  // namespace gq
