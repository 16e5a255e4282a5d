#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"
#include "gq/g37.hpp"
#include "gq/linalg.hpp"
#include "gq/sparse_poly.hpp"
#include "gq/tableau.hpp"

namespace gq {

/// Commutative product of Pluecker coordinates, kept as a sorted column list.
class PlueckerMonomial {
 public:
  PlueckerMonomial() = default;
  explicit PlueckerMonomial(std::vector<ColumnTuple> cols) : cols_(std::move(cols)) {
    std::sort(cols_.begin(), cols_.end());
    for (std::size_t k = 1; k < cols_.size(); ++k) require_same_shape(cols_[0], cols_[k]);
  }

  const std::vector<ColumnTuple>& columns() const& { return cols_; }
  std::vector<ColumnTuple> columns() && { return std::move(cols_); }
  int degree() const { return static_cast<int>(cols_.size()); }

  bool is_standard() const { return is_semistandard(cols_); }

  Tableau to_tableau(int r, int n) const { return Tableau::from_multiset(cols_, r, n); }

  /// Degree first, then lexicographic on the sorted column sequence.
  friend std::strong_ordering operator<=>(const PlueckerMonomial& a, const PlueckerMonomial& b) {
    if (auto c = a.cols_.size() <=> b.cols_.size(); c != 0) return c;
    return a.cols_ <=> b.cols_;
  }
  friend bool operator==(const PlueckerMonomial&, const PlueckerMonomial&) = default;

  friend PlueckerMonomial monomial_product(const PlueckerMonomial& a, const PlueckerMonomial& b) {
    std::vector<ColumnTuple> cols = a.cols_;
    cols.insert(cols.end(), b.cols_.begin(), b.cols_.end());
    return PlueckerMonomial(std::move(cols));
  }

  friend std::string monomial_to_string(const PlueckerMonomial& m) {
    std::string s;
    for (const auto& c : m.cols_) {
      if (!s.empty()) s += "*";
      s += "p";
      for (int i = 0; i < c.rank(); ++i) s += (c.n() >= 10 && i ? "," : "") + std::to_string(c[i]);
    }
    return s;
  }

 private:
  std::vector<ColumnTuple> cols_;
};

using PlueckerPoly = SparsePoly<PlueckerMonomial>;

/// n x r matrix whose maximal minors are the Pluecker coordinates of a point.
using PointMatrix = QMatrix;

inline PlueckerPoly pluecker(const ColumnTuple& c) { return PlueckerPoly(PlueckerMonomial({c})); }

inline PlueckerPoly tableau_to_poly(const Tableau& t) {
  return PlueckerPoly(PlueckerMonomial(t.columns()));
}

inline PlueckerPoly product_of(const std::vector<Tableau>& ts) {
  std::vector<ColumnTuple> cols;
  for (const auto& t : ts) cols.insert(cols.end(), t.columns().begin(), t.columns().end());
  return PlueckerPoly(PlueckerMonomial(std::move(cols)));
}

namespace detail {

/// Sorts an index list into a column; returns the sign of the sort or 0 on a
/// repeated index.
inline int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

inline int permutation_sign(const std::vector<int>& order) {
  int sign = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) sign = -sign;
  return sign;
}

struct ExchangeTerm {
  int sign;
  ColumnTuple left, right;
};

/// Garnir exchange for a column pair a <= b (lex) violating a_k > b_k at the
/// first such row: rewrites p_a p_b as a signed sum of pairs that are strictly
/// smaller in the lexicographic order on sorted pairs.
inline std::vector<ExchangeTerm> garnir_exchange(const ColumnTuple& a, const ColumnTuple& b) {
  const int r = a.rank(), n = a.n();
  int k = 0;
  while (k < r && a[k] <= b[k]) ++k;
  if (k == r) throw ArgumentError("columns already comparable");
  // Z = (a_k..a_{r-1}, b_0..b_k), 0-based; left takes r-k slots, right k+1.
  std::vector<int> z;
  for (int i = k; i < r; ++i) z.push_back(a[i]);
  for (int i = 0; i <= k; ++i) z.push_back(b[i]);
  const int zs = static_cast<int>(z.size()), left_size = r - k;
  std::map<std::pair<ColumnTuple, ColumnTuple>, int> acc;
  std::vector<int> choose(static_cast<std::size_t>(zs), 0);
  std::fill(choose.begin(), choose.begin() + left_size, 1);
  std::sort(choose.begin(), choose.end(), std::greater<int>());
  do {
    bool identity = true;
    for (int i = 0; i < zs; ++i) identity = identity && (choose[i] == (i < left_size ? 1 : 0));
    if (identity) continue;
    std::vector<int> order, left, right;
    for (int i = 0; i < zs; ++i)
      if (choose[i]) order.push_back(i);
    for (int i = 0; i < zs; ++i)
      if (!choose[i]) order.push_back(i);
    for (int i = 0; i < k; ++i) left.push_back(a[i]);
    for (int i = 0; i < left_size; ++i) left.push_back(z[order[i]]);
    for (int i = left_size; i < zs; ++i) right.push_back(z[order[i]]);
    for (int i = k + 1; i < r; ++i) right.push_back(b[i]);
    const int sl = sort_with_sign(left), sr = sort_with_sign(right);
    if (sl == 0 || sr == 0) continue;
    // p_a p_b = - sum over non-identity shuffles.
    const int sign = -permutation_sign(order) * sl * sr;
    ColumnTuple cl(n, left), cr(n, right);
    if (cr < cl) std::swap(cl, cr);
    acc[{cl, cr}] += sign;
  } while (std::prev_permutation(choose.begin(), choose.end()));
  std::vector<ExchangeTerm> out;
  for (const auto& [pair, s] : acc)
    if (s != 0) out.push_back({s, pair.first, pair.second});
  return out;
}

}  // namespace detail

struct StraightenStats {
  long long exchanges = 0;
};

/// Rewrites p in the standard monomial basis. Monomials are processed from
/// the largest down; every exchange produces strictly smaller monomials.
inline PlueckerPoly straighten(const PlueckerPoly& p, StraightenStats* stats = nullptr) {
  std::map<PlueckerMonomial, Rational> pending(p.terms().begin(), p.terms().end());
  PlueckerPoly out;
  std::map<std::pair<ColumnTuple, ColumnTuple>, std::vector<detail::ExchangeTerm>> cache;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    const PlueckerMonomial mono = it->first;
    const Rational coef = it->second;
    pending.erase(it);
    if (coef == 0) continue;
    const auto& cols = mono.columns();
    std::size_t j = 0;
    while (j + 1 < cols.size() && bruhat_leq(cols[j], cols[j + 1])) ++j;
    if (j + 1 >= cols.size()) {
      out.add_term(mono, coef);
      continue;
    }
    if (stats) ++stats->exchanges;
    auto key = std::make_pair(cols[j], cols[j + 1]);
    auto cit = cache.find(key);
    if (cit == cache.end()) cit = cache.emplace(key, detail::garnir_exchange(cols[j], cols[j + 1])).first;
    for (const auto& term : cit->second) {
      std::vector<ColumnTuple> next = cols;
      next[j] = term.left;
      next[j + 1] = term.right;
      PlueckerMonomial nm(std::move(next));
      if (!(nm < mono)) throw InvariantViolation("straightening step did not decrease " + monomial_to_string(mono));
      auto [pit, fresh] = pending.try_emplace(nm, coef * term.sign);
      if (!fresh) pit->second += coef * term.sign;
    }
  }
  return out;
}

inline bool is_standard(const PlueckerPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!m.is_standard()) return false;
  return true;
}

/// Drops every term containing a column outside the interval [v, w].
inline PlueckerPoly restrict_schubert(const PlueckerPoly& p, const ColumnTuple& w, const ColumnTuple& v) {
  PlueckerPoly out;
  for (const auto& [m, c] : p.terms()) {
    bool keep = true;
    for (const auto& col : m.columns()) keep = keep && bruhat_leq(col, w) && bruhat_leq(v, col);
    if (keep) out.add_term(m, c);
  }
  return out;
}

inline Rational evaluate(const PlueckerMonomial& m, const PointMatrix& x) {
  Rational v = 1;
  for (const auto& c : m.columns()) {
    if (c.n() != x.rows() || c.rank() != x.cols())
      throw ArgumentError("point matrix must be n x r for the coordinates it evaluates");
    std::vector<int> rows, cols;
    for (int i = 0; i < c.rank(); ++i) rows.push_back(c[i] - 1), cols.push_back(i);
    v *= determinant(x.submatrix(rows, cols));
    if (v == 0) break;
  }
  return v;
}

inline Rational evaluate(const PlueckerPoly& p, const PointMatrix& x) {
  Rational v = 0;
  for (const auto& [m, c] : p.terms()) v += c * evaluate(m, x);
  return v;
}

struct SignedProduct {
  Rational coefficient;
  std::vector<Tableau> factors;
};

struct RelationCheck {
  bool holds = false;
  PlueckerPoly residue;  // straightened, restricted lhs - rhs
};

inline RelationCheck verify_relation(const std::vector<Tableau>& lhs, const std::vector<SignedProduct>& rhs,
                                     const ColumnTuple& w, const ColumnTuple& v, bool restrict = true) {
  PlueckerPoly diff = product_of(lhs);
  for (const auto& term : rhs) diff -= term.coefficient * product_of(term.factors);
  PlueckerPoly s = straighten(diff);
  if (restrict) s = restrict_schubert(s, w, v);
  return {s.is_zero(), s};
}

namespace g37 {

inline std::vector<Tableau> y_product(const std::vector<int>& idx) {
  std::vector<Tableau> out;
  for (int i : idx) out.push_back(y(i));
  return out;
}

/// One of 1a..1f checked by straightening, restricted to X(w) unless told otherwise.
inline RelationCheck verify(const Relation& rel, bool restrict = true) {
  std::vector<SignedProduct> rhs;
  for (const auto& [c, idx] : rel.rhs) rhs.push_back({Rational(c), y_product(idx)});
  return verify_relation(y_product(rel.lhs), rhs, w(), identity(), restrict);
}

}  // namespace g37

}  // namespace gq
