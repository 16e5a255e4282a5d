#pragma once

// The acceptance suite: twelve exact checks, each with a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gq/deodhar.hpp"
#include "gq/g37.hpp"
#include "gq/json_io.hpp"
#include "gq/pluecker.hpp"
#include "gq/projnorm.hpp"
#include "gq/rewriting.hpp"
#include "gq/tableaux.hpp"
#include "gq/weyl_grassmann.hpp"

namespace gq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool check = false;        // the mathematical check
  double seconds = 0;
  double budget_seconds = 0;
  Json detail = Json::object();

  bool within_budget() const { return seconds <= budget_seconds; }
  bool pass() const { return check && within_budget(); }
};

namespace acceptance {

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(Json&)> run;
};

inline bool c1(Json& d) {
  const ColumnTuple w = minimal_schubert(3, 7);
  const Tableau g = gamma_tableau(3, 8);
  const Tableau figure = Tableau::from_rows(8, {{1, 1, 1, 2, 2, 2, 3, 3}, {3, 4, 4, 4, 5, 5, 5, 6}, {6, 6, 7, 7, 7, 8, 8, 8}});
  d["minimal_schubert_3_7"] = to_json(w);
  d["gamma_3_8"] = to_json(g);
  return w == ColumnTuple(7, {3, 5, 7}) && g == figure;
}

inline bool c2(Json& d) {
  auto ys = enumerate_invariants(3, 7, 1, g37::w(), g37::identity());
  auto expect = g37::y_all();
  std::sort(expect.begin(), expect.end());
  auto gam = enumerate_invariants(3, 7, 1, g37::w(), ColumnTuple(7, {1, 3, 5}));
  d["count_v123"] = ys.size();
  d["count_v135"] = gam.size();
  return ys == expect && gam == std::vector<Tableau>{gamma_tableau(3, 7)};
}

inline bool c3(Json& d) {
  bool ok = true;
  for (int m = 1; m <= 2; ++m) {
    long long checked = 0;
    Json bad = Json::array();
    for_each_invariant(3, 7, m, g37::w(), g37::identity(), [&](const Tableau& t) {
      ++checked;
      auto f = column_census(t).failures();
      if (!f.empty() && bad.size() < 5) bad.push_back({{"tableau", to_json(t)}, {"failed", f}});
      ok = ok && f.empty();
    });
    d["m" + std::to_string(m)] = {{"tableaux", checked}, {"falsifiers", bad}};
  }
  return ok;
}

inline bool c4(Json& d) {
  auto p = [](int a, int b, int c) { return pluecker(g37::col(a, b, c)); };
  const PlueckerPoly got = straighten(p(2, 5, 7) * p(3, 4, 7));
  const PlueckerPoly want = p(2, 4, 7) * p(3, 5, 7) - p(2, 3, 7) * p(4, 5, 7);
  const RelationCheck z = verify_relation(g37::y_product({5, 7}), {{1, {g37::z20()}}}, g37::w(), g37::identity());
  d["straightened"] = got.to_string();
  d["y5y7_minus_z20"] = z.residue.to_string();
  return got == want && z.holds;
}

inline bool c5(Json& d) {
  bool all = true;
  int control_failures = 0;
  for (const auto& rel : g37::relations()) {
    RelationCheck r = g37::verify(rel);
    RelationCheck c = g37::verify(rel, false);
    all = all && r.holds;
    if (!c.holds) ++control_failures;
    d["relations"].push_back({{"label", rel.label}, {"holds", r.holds}, {"holds_unrestricted", c.holds}});
  }
  d["negative_control_failures"] = control_failures;
  return all && control_failures >= 1;
}

inline bool c6(Json& d) {
  const RewriteSystem R = g37_rewrite_system();
  const ConfluenceReport rep = check_confluence(R, 4);
  auto Y = [](const std::string& s) { return parse_ypoly(s, 7); };
  const std::map<std::string, std::string> stated = {{"Y1*Y2*Y5", "Y2*Y3^2 - Y2*Y3*Y7"}, {"Y1*Y2*Y6", "Y2*Y3*Y4 - Y2*Y4*Y7"}};
  int matched = 0;
  for (const auto& r : rep.results) {
    const std::string key = monomial_to_string(r.ambiguity.overlap);
    auto it = stated.find(key);
    if (it != stated.end() && r.joined() && r.via_a == Y(it->second)) ++matched;
  }
  d["ambiguities"] = rep.results.size();
  d["monomials_checked"] = rep.monomials_checked;
  d["stated_joins_matched"] = matched;
  return rep.confluent() && rep.exhaustive_ok && rep.through_degree == 4 && matched == 2;
}

inline bool c7(Json& d) {
  const RewriteSystem R = g37_rewrite_system();
  bool ok = normal_form_count(R, 1) == 7;
  for (int m = 1; m <= 3; ++m) {
    const long long nf = normal_form_count(R, m);
    const auto inv = static_cast<long long>(count_invariants(3, 7, m, g37::w(), g37::identity()));
    d["m" + std::to_string(m)] = {{"normal_forms", nf}, {"invariants", inv}};
    ok = ok && nf == inv;
  }
  return ok;
}

inline bool c8(Json& d) {
  const ScrollReport rep = scroll_matrix_check(g37_rewrite_system());
  d["minors"] = rep.minors.size();
  return rep.minors.size() == 6 && rep.all_vanish();
}

inline bool c9(Json& d, unsigned seed) {
  const ReducedWord word = g37_word();
  const Permutation w = word.evaluate();
  const int len = word.length();
  // Brute force over all 2^9 masks, classifying from prefix lengths directly.
  std::map<std::vector<int>, std::vector<unsigned>> pds_masks;
  for (unsigned bits = 0; bits < (1u << len); ++bits) {
    Permutation cur(7);
    bool pds = true;
    for (int k = 0; k < len; ++k) {
      Permutation moved = cur.times_simple(word[k]);
      const bool down = moved.length() < cur.length();
      if ((bits >> k) & 1u) {
        pds = pds && !down;
        cur = moved;
      } else if (down) {
        pds = false;
      }
    }
    if (pds) pds_masks[cur.one_line()].push_back(bits);
  }
  bool unique = true;
  long long below = 0;
  std::vector<int> one(7);
  std::iota(one.begin(), one.end(), 1);
  do {
    const Permutation v(one);
    if (!bruhat_leq(v, w)) {
      unique = unique && !pds_masks.count(one);
      continue;
    }
    ++below;
    auto it = pds_masks.find(one);
    if (it == pds_masks.end() || it->second.size() != 1) {
      unique = false;
      continue;
    }
    const SubexpressionMask found = find_pds(word, v);
    for (int k = 0; k < len; ++k) unique = unique && found.keep()[static_cast<std::size_t>(k)] == (((it->second[0] >> k) & 1u) != 0);
  } while (std::next_permutation(one.begin(), one.end()));
  d["permutations_below_w"] = below;
  d["pds_unique"] = unique;

  const SubexpressionMask m37 = find_pds(word, ColumnTuple(7, {1, 3, 5}).to_permutation());
  const ParamPoly y1 = restrict_section(g37::y(1), m37);
  const ParamPoly mono = param_monomial({1, 4, 2, 5, 3, 6, 0, 0, 0});
  const bool y1_ok = y1 == mono || y1 == Rational(-1) * mono;
  d["y1_on_v37"] = y1.to_string();

  const CellMatrix g37cell = cell_matrix(m37);
  bool deg21 = restriction_height(ColumnTuple(7, {1, 3, 5})) == 21;
  for (int i = 1; i <= 7; ++i) {
    ParamPoly s = restrict_section(g37::y(i), g37cell);
    if (!s.is_zero()) deg21 = deg21 && homogeneous_degree(s) == std::optional<int>(21);
  }
  d["degree_21"] = deg21;

  // Random (tableau, Grassmannian v <= w) pairs.
  std::vector<ColumnTuple> vs;
  for (const auto& c : all_column_tuples(3, 7))
    if (bruhat_leq(c, g37::w())) vs.push_back(c);
  std::vector<std::pair<int, Tableau>> pool;
  for (int m = 1; m <= 2; ++m)
    for (auto& t : enumerate_invariants(3, 7, m, g37::w(), g37::identity())) pool.emplace_back(m, t);
  std::map<ColumnTuple, CellMatrix> cells;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pt(0, pool.size() - 1), pv(0, vs.size() - 1);
  // Draw until 200 pairs have a nonzero restriction.
  int draws = 0, nonzero = 0;
  bool homog = true;
  for (; nonzero < 200 && draws < 100000; ++draws) {
    const auto& [m, t] = pool[pt(rng)];
    const ColumnTuple& v = vs[pv(rng)];
    auto it = cells.find(v);
    if (it == cells.end()) it = cells.emplace(v, cell_matrix(find_pds(word, v.to_permutation()))).first;
    ParamPoly s = restrict_section(t, it->second);
    if (s.is_zero()) continue;
    ++nonzero;
    homog = homog && homogeneous_degree(s) == std::optional<int>(static_cast<int>(m * restriction_height(v)));
  }
  d["random_draws"] = draws;
  d["random_nonzero"] = nonzero;
  d["homogeneity"] = homog;
  return unique && y1_ok && deg21 && homog && nonzero == 200;
}

inline bool c10(Json& d) {
  bool ok = true;
  for (ProbeCase c : {ProbeCase::s2s4s3, ProbeCase::s2s3, ProbeCase::s4s3, ProbeCase::s3}) {
    ProbeReport rep = quotient_probe(c);
    const bool pass = rep.ok && rep.nonzero == rep.expected_nonzero;
    d[to_string(c)] = {{"nonzero", rep.nonzero}, {"checks", rep.checks}, {"ok", pass}};
    ok = ok && pass;
  }
  return ok;
}

inline bool c11(Json& d, unsigned seed) {
  bool ok = true;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    const std::size_t size = count_invariants(2, n, m, ColumnTuple::top(2, n), ColumnTuple::identity(2, n));
    std::optional<std::size_t> sample;
    if (size >= 1000000) sample = 1000;
    FamilyAudit a = audit_family(n, m, sample, seed);
    Json fails = Json::object();
    for (const auto& [k, v] : a.failures) fails[k] = v;
    d["n" + std::to_string(n) + "_m" + std::to_string(m)] = {
        {"family_size", a.family_size}, {"checked", a.checked}, {"defected", a.defected}, {"failures", fails}};
    ok = ok && a.ok() && a.checked > 0 && a.passes.count("factorize") && a.passes.count("swap-reexpansion");
  }
  return ok;
}

inline bool c12(Json& d) {
  bool ok = true;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    SurjectivityReport r = surjectivity_oracle(n, m);
    d["n" + std::to_string(n) + "_m" + std::to_string(m)] = {
        {"products", r.products}, {"rank", r.dim_products}, {"dim", r.dim_rm}, {"equal", r.equal()}};
    ok = ok && r.equal();
  }
  return ok;
}

inline std::vector<Criterion> criteria(unsigned seed) {
  return {
      {1, "minimal Schubert tuple and Gamma_{3,8}", 0.001, c1},
      {2, "degree-one invariants of X(w_{3,7}) and of the Richardson cell", 1, c2},
      {3, "column census for m = 1, 2 in the (3,7) family", 30, c3},
      {4, "straightening example and y5*y7 = z20", 1, c4},
      {5, "relations 1a-1f and negative control", 5, c5},
      {6, "confluence through degree 4 and stated joins", 5, c6},
      {7, "normal-form counts equal invariant counts", 120, c7},
      {8, "scroll minors reduce to zero", 1, c8},
      {9, "PDS uniqueness, y1 restriction, homogeneity", 60, [seed](Json& d) { return c9(d, seed); }},
      {10, "quotient probes", 10, c10},
      {11, "G(2,n) lemmas, swap rewrite, factorization", 600, [seed](Json& d) { return c11(d, seed); }},
      {12, "surjectivity oracle", 600, c12},
  };
}

inline CriterionResult run_one(const Criterion& c) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.check = c.run(r.detail);
  } catch (const std::exception& e) {
    r.check = false;
    r.detail["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace acceptance

/// Runs the selected criteria (all when empty), up to `threads` at a time;
/// results come back ordered by id.
inline std::vector<CriterionResult> acceptance_suite(const std::vector<int>& selection, unsigned seed, int threads = 1) {
  std::vector<acceptance::Criterion> todo;
  for (auto& c : acceptance::criteria(seed))
    if (selection.empty() || std::find(selection.begin(), selection.end(), c.id) != selection.end()) todo.push_back(c);
  for (int id : selection)
    if (id < 1 || id > 12) throw ArgumentError("no acceptance criterion " + std::to_string(id));
  std::vector<CriterionResult> out;
  const std::size_t batch = static_cast<std::size_t>(std::max(1, threads));
  for (std::size_t i = 0; i < todo.size(); i += batch) {
    if (batch == 1) {
      out.push_back(acceptance::run_one(todo[i]));
      continue;
    }
    std::vector<std::future<CriterionResult>> fs;
    for (std::size_t j = i; j < std::min(todo.size(), i + batch); ++j)
      fs.push_back(std::async(std::launch::async, acceptance::run_one, todo[j]));
    for (auto& f : fs) out.push_back(f.get());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace gq
