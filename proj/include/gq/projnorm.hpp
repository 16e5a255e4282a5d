#pragma once

// Degree-one generation for torus quotients of G(2, n), n odd.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"
#include "gq/linalg.hpp"
#include "gq/pluecker.hpp"
#include "gq/tableau.hpp"
#include "gq/tableaux.hpp"

namespace gq {

struct MuNuSplit {
  Tableau source;
  int m = 1;
  Tableau mu;  // columns 1, m+1, ..., (n-1)m+1
  Tableau nu;  // the rest
};

namespace detail {

inline void require_g2n_invariant(const Tableau& t, int m) {
  if (t.rows() != 2) throw ArgumentError("expected a two-row tableau");
  if (m < 1 || t.cols() != m * t.n()) throw ArgumentError("expected 2 x (m n) columns for m = " + std::to_string(m));
  for (int x = 1; x <= t.n(); ++x)
    if (t.content()[x] != 2 * m) throw ArgumentError("tableau is not torus-invariant: " + t.to_string());
}

inline Tableau from_cols(std::vector<ColumnTuple> cols, int r, int n) {
  return Tableau::from_multiset(std::move(cols), r, n);
}

}  // namespace detail

inline MuNuSplit split(const Tableau& t, int m) {
  detail::require_g2n_invariant(t, m);
  std::vector<ColumnTuple> mu, nu;
  for (int j = 0; j < t.cols(); ++j) (j % m == 0 ? mu : nu).push_back(t.column(j));
  return {t, m, detail::from_cols(mu, 2, t.n()), detail::from_cols(nu, 2, t.n())};
}

struct DefectProfile {
  std::vector<int> defects;     // i_1 < ... < i_{2l}
  ContentVector multiplicity;   // content of mu
  bool all_present = true;
  bool even_count = true;
  bool alternation = true;      // 3 for odd j, 1 for even j
  bool odd_in_both_rows = true;

  bool lemmas_hold() const { return all_present && even_count && alternation && odd_in_both_rows; }
  std::vector<std::string> violations() const {
    std::vector<std::string> v;
    if (!all_present) v.push_back("presence");
    if (!even_count) v.push_back("parity");
    if (!alternation) v.push_back("alternation");
    if (!odd_in_both_rows) v.push_back("both-rows");
    return v;
  }
};

inline DefectProfile defect_profile(const MuNuSplit& s) {
  DefectProfile d;
  const int n = s.source.n();
  d.multiplicity = s.mu.content();
  for (int x = 1; x <= n; ++x) {
    if (d.multiplicity[x] == 0) d.all_present = false;
    if (d.multiplicity[x] % 2) d.defects.push_back(x);
  }
  d.even_count = d.defects.size() % 2 == 0;
  for (std::size_t j = 0; j < d.defects.size(); ++j) {
    const int x = d.defects[j];
    const bool odd = j % 2 == 0;  // 1-based j odd
    if (d.multiplicity[x] != (odd ? 3 : 1)) d.alternation = false;
    if (odd) {
      bool top = false, bottom = false;
      for (int c = 0; c < s.mu.cols(); ++c) top = top || s.mu.at(0, c) == x, bottom = bottom || s.mu.at(1, c) == x;
      if (!(top && bottom)) d.odd_in_both_rows = false;
    }
  }
  return d;
}

/// First and last 1-based column of value i in each row.
struct RowPositions {
  std::optional<int> f_bottom, l_bottom, f_top, l_top;
  bool applicable = false;  // i occurs in both rows
  bool holds = true;        // (f_bottom - 1) + (f_top - 1) = 0 mod m
};

inline RowPositions mod_m_symmetry(const Tableau& t, int m, int i) {
  RowPositions p;
  for (int c = 1; c <= t.cols(); ++c) {
    if (t.at(0, c - 1) == i) {
      if (!p.f_top) p.f_top = c;
      p.l_top = c;
    }
    if (t.rows() > 1 && t.at(1, c - 1) == i) {
      if (!p.f_bottom) p.f_bottom = c;
      p.l_bottom = c;
    }
  }
  p.applicable = p.f_top && p.f_bottom;
  if (p.applicable) p.holds = ((*p.f_bottom - 1) + (*p.f_top - 1)) % m == 0;
  return p;
}

/// Two source columns of an S-block; entries (1) top-left, (2) top-right,
/// (3) bottom-left, (4) bottom-right.
struct SPair {
  int left = 0, right = 0;  // 1-based column positions
  ColumnTuple L, R;
  int e1() const { return L[0]; }
  int e2() const { return R[0]; }
  int e3() const { return L[1]; }
  int e4() const { return R[1]; }
};

struct SBlock {
  int j = 0;  // odd, 1-based
  int i_j = 0, i_next = 0;
  std::vector<SPair> pairs;
  bool adjacency = true;        // (4) of pair k equals (3) of pair k+1
  bool bottom_above_top = true;  // (3) >= (2) in every pair
  bool has_equality = false;     // some pair with (3) = (2)
  bool distinct_ends = true;     // first and last columns differ
  int columns() const { return 2 * static_cast<int>(pairs.size()); }
};

inline std::vector<SBlock> s_blocks(const Tableau& t, int m, const DefectProfile& d) {
  std::vector<SBlock> out;
  auto block_of = [m](int c) { return (c - 1) / m + 1; };
  for (std::size_t jj = 0; jj + 1 < d.defects.size(); jj += 2) {
    SBlock b;
    b.j = static_cast<int>(jj) + 1;
    b.i_j = d.defects[jj];
    b.i_next = d.defects[jj + 1];
    const RowPositions pj = mod_m_symmetry(t, m, b.i_j), pn = mod_m_symmetry(t, m, b.i_next);
    if (!pj.l_bottom || !pn.f_bottom)
      throw InvariantViolation("defect " + std::to_string(b.i_j) + "/" + std::to_string(b.i_next) +
                               " missing from the bottom row of " + t.to_string());
    const int l = block_of(*pj.l_bottom), fpos = *pn.f_bottom, f = block_of(fpos);
    std::vector<int> cols;
    for (int k = l; k < f; ++k) cols.push_back((k - 1) * m + 1), cols.push_back(k * m);
    cols.push_back((f - 1) * m + 1);
    cols.push_back(fpos);
    b.distinct_ends = cols.front() != cols.back() && cols[cols.size() - 2] != cols.back();
    for (std::size_t k = 0; k + 1 < cols.size(); k += 2)
      b.pairs.push_back({cols[k], cols[k + 1], t.column(cols[k] - 1), t.column(cols[k + 1] - 1)});
    for (std::size_t k = 0; k < b.pairs.size(); ++k) {
      if (k + 1 < b.pairs.size() && b.pairs[k].e4() != b.pairs[k + 1].e3()) b.adjacency = false;
      if (b.pairs[k].e3() < b.pairs[k].e2()) b.bottom_above_top = false;
      if (b.pairs[k].e3() == b.pairs[k].e2()) b.has_equality = true;
    }
    out.push_back(std::move(b));
  }
  return out;
}

/// Per-pair operation: B swaps bottoms, T swaps tops, C swaps the columns, N leaves them.
enum class SwapOp { B, T, C, N };

inline char to_char(SwapOp op) { return "BTCN"[static_cast<int>(op)]; }

struct SwapPlan {
  std::string branch;  // "case1", "case2-odd", "case2-even"
  std::vector<SwapOp> ops;
  bool boundary = false;  // the last equal pair is the block's final pair
};

/// Case 1 when no pair has (3) = (2); otherwise the alternating Case 2
/// scheme over the distinct equal values m_1 < ... < m_e in [i_j, i_{j+1}).
inline SwapPlan plan_swaps(const SBlock& b) {
  const int T = static_cast<int>(b.pairs.size());
  SwapPlan plan;
  if (!b.has_equality) return {"case1", std::vector<SwapOp>(static_cast<std::size_t>(T), SwapOp::B)};
  std::vector<int> values;
  for (const auto& p : b.pairs)
    if (p.e3() == p.e2() && b.i_j <= p.e3() && p.e3() < b.i_next) values.push_back(p.e3());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> ks;  // 1-based first pair index carrying each value
  for (int v : values)
    for (int k = 1; k <= T; ++k)
      if (b.pairs[static_cast<std::size_t>(k - 1)].e3() == v && b.pairs[static_cast<std::size_t>(k - 1)].e2() == v) {
        ks.push_back(k);
        break;
      }
  const int e = static_cast<int>(ks.size());
  plan.ops.assign(static_cast<std::size_t>(T), SwapOp::N);
  auto fill = [&](int from, int to, SwapOp op) {
    for (int l = from; l < to; ++l) plan.ops[static_cast<std::size_t>(l - 1)] = op;
  };
  int cur;
  // Odd e starts at the first pair whose top-left is i_j with a top run;
  // even e starts at pair 1 with a bottom run.
  const bool odd = e % 2 == 1;
  if (odd) {
    cur = 0;
    for (int k = 1; k <= T && !cur; ++k)
      if (b.pairs[static_cast<std::size_t>(k - 1)].e1() == b.i_j) cur = k;
    if (!cur) throw InvariantViolation("case 2 (odd) has no pair starting at i_j");
  } else {
    cur = 1;
  }
  for (int idx = 0; idx < e; ++idx) {
    const int kk = ks[static_cast<std::size_t>(idx)];
    const bool top_run = (idx % 2 == 0) == odd;
    fill(cur, kk, top_run ? SwapOp::T : SwapOp::B);
    plan.ops[static_cast<std::size_t>(kk - 1)] = top_run ? SwapOp::C : SwapOp::N;
    cur = kk + 1;
  }
  fill(cur, T + 1, SwapOp::B);
  plan.boundary = !ks.empty() && ks.back() == T;
  plan.branch = odd ? "case2-odd" : "case2-even";
  return plan;
}

struct PairSign {
  int left, right;  // columns
  SwapOp op;
  int sigma;        // p_L p_R = p_L' p_R' + sigma * p_{(1)(2)} p_{(3)(4)}; 0 when that term vanishes
};

struct SwapResult {
  Tableau source;
  int m = 1;
  std::vector<ColumnTuple> rearranged;  // column list after the swaps, in position order
  PlueckerMonomial mu_prime, nu_prime;
  PlueckerPoly corrections;             // straightened, every term deglex-below source
  std::vector<std::string> branches;
  std::vector<PairSign> signs;
  bool mu_prime_zero_weight = false;
  bool columns_valid = false;
  bool corrections_smaller = false;
  bool reexpansion_exact = false;

  bool ok() const { return mu_prime_zero_weight && columns_valid && corrections_smaller && reexpansion_exact; }
};

namespace detail {

/// p_{xy} with the alternating convention; nullopt-like zero when x = y.
inline PlueckerPoly signed_pluecker(int n, int x, int y) {
  if (x == y) return {};
  if (x < y) return pluecker(ColumnTuple(n, {x, y}));
  return Rational(-1) * pluecker(ColumnTuple(n, {y, x}));
}

inline bool monomial_below(const PlueckerPoly& p, const PlueckerMonomial& bound) {
  for (const auto& [mono, c] : p.terms())
    if (!(mono < bound)) return false;
  return true;
}

}  // namespace detail

inline SwapResult swap_rewrite(const Tableau& t, int m) {
  const MuNuSplit s = split(t, m);
  const DefectProfile d = defect_profile(s);
  const int n = t.n();
  SwapResult res;
  res.source = t;
  res.m = m;
  res.rearranged = t.columns();
  const PlueckerMonomial self(t.columns());

  std::vector<bool> touched(static_cast<std::size_t>(t.cols()), false);
  // main * rest tracks p_{t'}; corr collects every expansion term with a correction factor.
  PlueckerPoly main_part(PlueckerMonomial{}), corr;
  for (const auto& blk : s_blocks(t, m, d)) {
    SwapPlan plan = plan_swaps(blk);
    res.branches.push_back(plan.branch);
    if (plan.boundary) res.branches.push_back("case2-boundary");
    for (std::size_t k = 0; k < blk.pairs.size(); ++k) {
      const SPair& pr = blk.pairs[k];
      const SwapOp op = plan.ops[k];
      const int a = pr.e1(), b = pr.e3(), c = pr.e2(), dd = pr.e4();
      std::vector<int> newL{a, b}, newR{c, dd};
      if (op == SwapOp::B) newL = {a, dd}, newR = {c, b};
      if (op == SwapOp::T) newL = {c, b}, newR = {a, dd};
      if (op == SwapOp::C) newL = {c, dd}, newR = {a, b};
      auto li = static_cast<std::size_t>(pr.left - 1), ri = static_cast<std::size_t>(pr.right - 1);
      if (touched[li] || touched[ri]) throw InvariantViolation("S-blocks overlap in " + t.to_string());
      touched[li] = touched[ri] = true;
      if (newL[0] >= newL[1] || newR[0] >= newR[1]) {
        res.columns_valid = false;
        return res;
      }
      res.rearranged[li] = ColumnTuple(n, newL);
      res.rearranged[ri] = ColumnTuple(n, newR);

      const PlueckerPoly A = pluecker(res.rearranged[li]) * pluecker(res.rearranged[ri]);
      PlueckerPoly E;
      int sigma = 0;
      if (op == SwapOp::B || op == SwapOp::T) {
        const PlueckerPoly third = detail::signed_pluecker(n, a, c) * detail::signed_pluecker(n, b, dd);
        const PlueckerPoly diff = straighten(pluecker(pr.L) * pluecker(pr.R) - A);
        if (diff.is_zero() && straighten(third).is_zero()) sigma = 0;
        else if (straighten(third) == diff) sigma = 1;
        else if (straighten(Rational(-1) * third) == diff) sigma = -1;
        else throw InvariantViolation("three-term exchange sign unresolved for pair " + pr.L.to_string() + pr.R.to_string());
        E = Rational(sigma) * third;
      }
      res.signs.push_back({pr.left, pr.right, op, sigma});
      corr = corr * (A + E) + main_part * E;
      main_part = main_part * A;
    }
  }
  res.columns_valid = true;
  for (const auto& c : res.rearranged) res.columns_valid = res.columns_valid && c[0] < c[1];

  std::vector<ColumnTuple> rest, mu, nu;
  for (int j = 0; j < t.cols(); ++j) {
    (j % m == 0 ? mu : nu).push_back(res.rearranged[static_cast<std::size_t>(j)]);
    if (!touched[static_cast<std::size_t>(j)]) rest.push_back(t.column(j));
  }
  res.mu_prime = PlueckerMonomial(mu);
  res.nu_prime = PlueckerMonomial(nu);
  const ContentVector mc = content_of(mu, n);
  res.mu_prime_zero_weight = true;
  for (int x = 1; x <= n; ++x) res.mu_prime_zero_weight = res.mu_prime_zero_weight && mc[x] == 2;

  const PlueckerPoly rest_poly(PlueckerMonomial{rest});
  res.corrections = straighten(corr * rest_poly);
  res.corrections_smaller = detail::monomial_below(res.corrections, self);
  const PlueckerPoly rebuilt = straighten(PlueckerPoly(monomial_product(res.mu_prime, res.nu_prime))) + res.corrections;
  res.reexpansion_exact = rebuilt == PlueckerPoly(self);
  return res;
}

// ---------------------------------------------------------------------------
// Factorization into products of degree-one invariants.

using FactorProduct = std::vector<Tableau>;  // sorted degree-one invariants
using Factorization = std::map<FactorProduct, Rational>;

inline Factorization multiply(const Factorization& a, const Factorization& b) {
  Factorization out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      FactorProduct p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      std::sort(p.begin(), p.end());
      Rational& slot = out[p];
      slot += ca * cb;
      if (slot == 0) out.erase(p);
    }
  return out;
}

inline void accumulate(Factorization& into, const Factorization& f, const Rational& scale) {
  for (const auto& [p, c] : f) {
    Rational& slot = into[p];
    slot += c * scale;
    if (slot == 0) into.erase(p);
  }
}

inline PlueckerPoly expand(const Factorization& f) {
  PlueckerPoly out;
  for (const auto& [prod, c] : f) out += c * product_of(prod);
  return straighten(out);
}

struct FactorizeStats {
  long long rewrites = 0, defect_free = 0, memo_hits = 0;
  std::map<std::string, long long> branches;
};

/// Recursive degree-one factorization with memoization. Corrections must be
/// strictly deglex-below the tableau they came from; factors of mu' and nu'
/// drop the degree.
class Factorizer {
 public:
  explicit Factorizer(int m_max = 0) { (void)m_max; }

  const Factorization& factorize(const Tableau& t) {
    if (auto it = memo_.find(t); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    const int m = t.cols() / t.n();
    detail::require_g2n_invariant(t, m);
    Factorization f;
    if (m == 1) {
      f[{t}] = 1;
    } else {
      const MuNuSplit s = split(t, m);
      const DefectProfile d = defect_profile(s);
      if (d.defects.empty()) {
        ++stats_.defect_free;
        f = multiply(Factorization{{{s.mu}, 1}}, factorize(s.nu));
      } else {
        ++stats_.rewrites;
        SwapResult sr = swap_rewrite(t, m);
        if (!sr.ok()) throw InvariantViolation("swap rewrite failed on " + t.to_string());
        for (const auto& b : sr.branches) ++stats_.branches[b];
        const PlueckerPoly mu_std = straighten(PlueckerPoly(sr.mu_prime));
        const PlueckerPoly nu_std = straighten(PlueckerPoly(sr.nu_prime));
        for (const auto& [mm, cm] : mu_std.terms()) {
          Factorization fm{{{mm.to_tableau(2, t.n())}, cm}};
          for (const auto& [nm, cn] : nu_std.terms())
            accumulate(f, multiply(fm, factorize(nm.to_tableau(2, t.n()))), cn);
        }
        for (const auto& [cm, cc] : sr.corrections.terms()) {
          Tableau smaller = cm.to_tableau(2, t.n());
          if (deglex_compare(smaller, t) >= 0) throw InvariantViolation("deglex did not decrease at " + t.to_string());
          accumulate(f, factorize(smaller), cc);
        }
      }
    }
    return memo_.emplace(t, std::move(f)).first->second;
  }

  const FactorizeStats& stats() const { return stats_; }

 private:
  std::map<Tableau, Factorization> memo_;
  FactorizeStats stats_;
};

inline Factorization factorize(const Tableau& t) {
  Factorizer f;
  return f.factorize(t);
}

/// Column selections s, s+m, s+2m, ... for s = 1..m.
inline std::vector<Tableau> shifted_selections(const Tableau& t, int m) {
  std::vector<Tableau> out;
  for (int s = 0; s < m; ++s) {
    std::vector<ColumnTuple> cols;
    for (int j = s; j < t.cols(); j += m) cols.push_back(t.column(j));
    out.push_back(detail::from_cols(cols, t.rows(), t.n()));
  }
  return out;
}

inline Tableau deglex_minimal_invariant(int n, int m) {
  std::optional<Tableau> first;
  for_each_invariant(2, n, m, ColumnTuple::top(2, n), ColumnTuple::identity(2, n), [&](const Tableau& t) {
    if (!first) first = t;
  });
  if (!first) throw NotFound("no invariants for n = " + std::to_string(n));
  return *first;
}

// ---------------------------------------------------------------------------

struct SurjectivityReport {
  int n = 0, m = 0;
  ColumnTuple w, v;
  long long degree_one = 0, products = 0;
  long long dim_products = 0, dim_rm = 0;
  bool equal() const { return dim_products == dim_rm; }
};

/// Rank of all products of m degree-one invariants, straightened and
/// restricted to [v, w], against the size of the standard basis of R(m).
inline SurjectivityReport surjectivity_oracle(int n, int m, const ColumnTuple& w, const ColumnTuple& v) {
  SurjectivityReport rep{n, m, w, v};
  const auto r1 = enumerate_invariants(2, n, 1, w, v);
  const auto rm = enumerate_invariants(2, n, m, w, v);
  rep.degree_one = static_cast<long long>(r1.size());
  rep.dim_rm = static_cast<long long>(rm.size());
  std::map<PlueckerMonomial, int> index;
  for (std::size_t i = 0; i < rm.size(); ++i) index.emplace(PlueckerMonomial(rm[i].columns()), static_cast<int>(i));
  std::vector<std::vector<std::pair<int, Rational>>> rows;
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  const std::size_t k = r1.size();
  if (k == 0 && m > 0) return rep;
  while (true) {
    std::vector<Tableau> fs;
    for (std::size_t i : pick) fs.push_back(r1[i]);
    PlueckerPoly p = restrict_schubert(straighten(product_of(fs)), w, v);
    std::vector<std::pair<int, Rational>> row;
    for (const auto& [mono, c] : p.terms()) {
      auto it = index.find(mono);
      if (it == index.end()) throw InvariantViolation("product left the invariant basis: " + monomial_to_string(mono));
      row.emplace_back(it->second, c);
    }
    rows.push_back(std::move(row));
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == k - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q < m; ++q) pick[static_cast<std::size_t>(q)] = next;
  }
  rep.products = static_cast<long long>(rows.size());
  QMatrix a(static_cast<int>(rows.size()), static_cast<int>(rm.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, c] : rows[i]) a(static_cast<int>(i), j) = c;
  rep.dim_products = rank(std::move(a));
  return rep;
}

inline SurjectivityReport surjectivity_oracle(int n, int m) {
  return surjectivity_oracle(n, m, ColumnTuple::top(2, n), ColumnTuple::identity(2, n));
}

// ---------------------------------------------------------------------------
// Family audit: every lemma and postcondition over a set of invariants.

struct FamilyAudit {
  int n = 0, m = 0;
  long long family_size = 0, checked = 0, defected = 0;
  std::map<std::string, long long> passes, failures;
  std::map<std::string, long long> branches;
  std::vector<std::pair<std::string, Tableau>> falsifiers;  // first few per lemma
  bool ok() const { return failures.empty(); }

  void record(const std::string& name, bool pass, const Tableau& t) {
    if (pass) {
      ++passes[name];
      return;
    }
    ++failures[name];
    if (falsifiers.size() < 10) falsifiers.emplace_back(name, t);
  }
};

inline FamilyAudit audit_family(int n, int m, std::optional<std::size_t> sample, unsigned seed) {
  FamilyAudit a;
  a.n = n;
  a.m = m;
  std::vector<Tableau> family = enumerate_invariants(2, n, m, ColumnTuple::top(2, n), ColumnTuple::identity(2, n));
  a.family_size = static_cast<long long>(family.size());
  if (sample && *sample < family.size()) {
    std::mt19937 rng(seed);
    std::shuffle(family.begin(), family.end(), rng);
    family.resize(*sample);
    std::sort(family.begin(), family.end());
  }
  Factorizer fz;
  for (const auto& t : family) {
    ++a.checked;
    const MuNuSplit s = split(t, m);
    const DefectProfile d = defect_profile(s);
    a.record("presence", d.all_present, t);
    a.record("parity", d.even_count, t);
    a.record("alternation", d.alternation, t);
    a.record("both-rows", d.odd_in_both_rows, t);
    bool congruence = true;
    for (int i = 1; i <= n; ++i) congruence = congruence && mod_m_symmetry(t, m, i).holds;
    a.record("mod-m-congruence", congruence, t);
    if (!d.defects.empty()) {
      ++a.defected;
      bool adj = true, weak = true, even = true, ends = true;
      for (const auto& b : s_blocks(t, m, d)) {
        adj = adj && b.adjacency;
        weak = weak && b.bottom_above_top;
        even = even && b.columns() % 2 == 0;
        ends = ends && b.distinct_ends;
      }
      a.record("s-block-adjacency", adj, t);
      a.record("s-block-bottom-above-top", weak, t);
      a.record("s-block-even-columns", even && ends, t);
      SwapResult sr = swap_rewrite(t, m);
      for (const auto& br : sr.branches) ++a.branches[br];
      a.record("swap-mu-zero-weight", sr.mu_prime_zero_weight && sr.columns_valid, t);
      a.record("swap-corrections-smaller", sr.corrections_smaller, t);
      a.record("swap-reexpansion", sr.reexpansion_exact, t);
    }
    bool fact_ok = false;
    try {
      fact_ok = expand(fz.factorize(t)) == PlueckerPoly(PlueckerMonomial(t.columns()));
    } catch (const InvariantViolation&) {
      fact_ok = false;
    }
    a.record("factorize", fact_ok, t);
  }
  return a;
}

}  // namespace gq
