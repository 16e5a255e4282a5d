#pragma once

// JSON encodings shared by the command-line reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "gq/column_tuple.hpp"
#include "gq/rational.hpp"
#include "gq/tableau.hpp"
#include "gq/weyl_grassmann.hpp"

namespace gq {

using Json = nlohmann::ordered_json;

inline Json to_json(const ColumnTuple& c) { return Json{{"r", c.rank()}, {"n", c.n()}, {"entries", c.to_vector()}}; }

inline Json to_json(const Tableau& t) {
  Json rows = Json::array();
  for (int i = 0; i < t.rows(); ++i) rows.push_back(t.row(i));
  return Json{{"rows", t.rows()}, {"cols", t.cols()}, {"entries", rows}};
}

inline Json to_json(const Weight& w) { return Json{{"eps", w.eps()}}; }

inline Json to_json(const std::vector<Tableau>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back(to_json(t));
  return a;
}

inline ColumnTuple column_from_json(const Json& j) {
  return ColumnTuple(j.at("n").get<int>(), j.at("entries").get<std::vector<int>>());
}

inline Tableau tableau_from_json(const Json& j, int n) {
  const auto rows = j.at("entries").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(rows.size()) != j.at("rows").get<int>()) throw ArgumentError("row count mismatch in tableau JSON");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != j.at("cols").get<int>()) throw ArgumentError("column count mismatch in tableau JSON");
  return Tableau::from_rows(n, rows);
}

}  // namespace gq
