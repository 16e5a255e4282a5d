#pragma once

// Named invariants of X(w_{3,7}) in G(3,7): the degree-1 basis y1..y7 and the
// degree-2 tableau z20, as displayed row by row.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gq/tableau.hpp"

namespace gq::g37 {

inline constexpr int kRank = 3;
inline constexpr int kN = 7;

inline Tableau y(int i) {
  static const std::array<std::vector<std::vector<int>>, 7> rows = {{
      {{1, 1, 1, 2, 2, 2, 3}, {3, 3, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 2, 2, 3}, {3, 3, 4, 4, 5, 5, 5}, {4, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 2, 3, 3}, {2, 3, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 2, 3, 3}, {2, 3, 4, 4, 5, 5, 5}, {4, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 3, 3, 3}, {2, 2, 4, 4, 4, 5, 5}, {5, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 3, 3, 3}, {2, 2, 4, 4, 5, 5, 5}, {4, 6, 6, 6, 7, 7, 7}},
      {{1, 1, 1, 2, 2, 3, 3}, {2, 4, 4, 4, 5, 5, 5}, {3, 6, 6, 6, 7, 7, 7}},
  }};
  if (i < 1 || i > 7) throw ArgumentError("y index must be in 1..7");
  return Tableau::from_rows(kN, rows[static_cast<std::size_t>(i - 1)]);
}

inline Tableau z20() {
  return Tableau::from_rows(kN, {{1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3},
                                 {2, 2, 2, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5},
                                 {3, 5, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7}});
}

inline std::vector<Tableau> y_all() {
  std::vector<Tableau> out;
  for (int i = 1; i <= 7; ++i) out.push_back(y(i));
  return out;
}

/// Y-index form of a relation: lhs product equals sum of coef * product.
struct Relation {
  std::string label;
  std::vector<int> lhs;
  std::vector<std::pair<int, std::vector<int>>> rhs;
};

/// Relations among y1..y7 on X(w_{3,7}), labelled 1a..1f.
inline const std::vector<Relation>& relations() {
  static const std::vector<Relation> rels = {
      {"1a", {1, 4}, {{1, {2, 3}}, {-1, {2, 7}}, {1, {1, 7}}}},
      {"1b", {1, 5}, {{1, {3, 3}}, {-1, {3, 7}}}},
      {"1c", {1, 6}, {{1, {3, 4}}, {-1, {4, 7}}}},
      {"1d", {2, 5}, {{1, {3, 4}}, {-1, {3, 7}}}},
      {"1e", {2, 6}, {{1, {4, 4}}, {-1, {4, 7}}}},
      {"1f", {3, 6}, {{1, {4, 5}}}},
  };
  return rels;
}

inline ColumnTuple col(int a, int b, int c) { return ColumnTuple(kN, {a, b, c}); }

inline ColumnTuple w() { return col(3, 5, 7); }
inline ColumnTuple identity() { return col(1, 2, 3); }

}  // namespace gq::g37
