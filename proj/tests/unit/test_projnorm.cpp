#include <random>

#include <gtest/gtest.h>

#include "gq/projnorm.hpp"
#include "gq/weyl_grassmann.hpp"

using namespace gq;

namespace {

// Random integer 2 x n point; Pluecker coordinates are its 2 x 2 minors.
PointMatrix random_point(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  PointMatrix x(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) x(i, j) = d(rng);
  return x;
}

Rational eval_tableau(const Tableau& t, const PointMatrix& x) { return evaluate(PlueckerMonomial(t.columns()), x); }

std::vector<Tableau> family(int n, int m) {
  return enumerate_invariants(2, n, m, ColumnTuple::top(2, n), ColumnTuple::identity(2, n));
}

// Multiplicity of each value among columns 1, m+1, ..., read off the rows.
std::vector<int> mu_counts(const Tableau& t, int m) {
  std::vector<int> c(static_cast<std::size_t>(t.n() + 1), 0);
  for (int row = 0; row < 2; ++row) {
    auto r = t.row(row);
    for (std::size_t j = 0; j < r.size(); j += static_cast<std::size_t>(m)) ++c[static_cast<std::size_t>(r[j])];
  }
  return c;
}

}  // namespace

TEST(Split, ColumnsByResidue) {
  Tableau t = Tableau::from_rows(5, {{1, 1, 1, 1, 2, 2, 2, 3, 3, 4}, {2, 2, 3, 3, 3, 4, 4, 5, 5, 5}});
  // Not all contents equal: rejected.
  EXPECT_THROW(split(t, 2), ArgumentError);
  for (const auto& s : family(5, 2)) {
    MuNuSplit sp = split(s, 2);
    EXPECT_EQ(sp.mu.cols(), 5);
    EXPECT_EQ(sp.nu.cols(), 5);
    for (int x = 1; x <= 5; ++x) EXPECT_EQ(sp.mu.content()[x] + sp.nu.content()[x], 4);
  }
  EXPECT_THROW(split(family(5, 2)[0], 3), ArgumentError);
}

TEST(DefectProfile, MatchesRowCount) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    for (const auto& t : family(n, m)) {
      DefectProfile d = defect_profile(split(t, m));
      auto c = mu_counts(t, m);
      std::vector<int> odd;
      for (int x = 1; x <= n; ++x) {
        EXPECT_EQ(d.multiplicity[x], c[static_cast<std::size_t>(x)]);
        if (c[static_cast<std::size_t>(x)] % 2) odd.push_back(x);
      }
      EXPECT_EQ(d.defects, odd);
      EXPECT_TRUE(d.lemmas_hold()) << t.to_string();
    }
  }
}

TEST(ModMSymmetry, AbsentValuesAreNotApplicable) {
  Tableau t = family(5, 2).front();
  for (int i = 1; i <= 5; ++i) {
    RowPositions p = mod_m_symmetry(t, 2, i);
    EXPECT_EQ(p.applicable, p.f_top.has_value() && p.f_bottom.has_value());
    if (!p.applicable) {
      EXPECT_TRUE(p.holds);
    }
  }
  // 1 never reaches the bottom row of a two-row semistandard tableau.
  EXPECT_FALSE(mod_m_symmetry(t, 2, 1).applicable);
}

TEST(SBlocks, StructureOnExhaustiveFamilies) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    int blocks = 0;
    for (const auto& t : family(n, m)) {
      DefectProfile d = defect_profile(split(t, m));
      auto bs = s_blocks(t, m, d);
      EXPECT_EQ(bs.size(), d.defects.size() / 2);
      for (const auto& b : bs) {
        ++blocks;
        EXPECT_TRUE(b.adjacency);
        EXPECT_TRUE(b.bottom_above_top);
        EXPECT_EQ(b.columns() % 2, 0);
        for (const auto& p : b.pairs) {
          EXPECT_EQ(t.column(p.left - 1), p.L);
          EXPECT_EQ(t.column(p.right - 1), p.R);
        }
      }
    }
    EXPECT_GT(blocks, 0);
  }
}

TEST(SwapPlan, BranchesAreExercised) {
  std::map<std::string, int> seen;
  for (const auto& t : family(7, 2)) {
    DefectProfile d = defect_profile(split(t, 2));
    for (const auto& b : s_blocks(t, 2, d)) {
      SwapPlan p = plan_swaps(b);
      ++seen[p.branch];
      EXPECT_EQ(p.ops.size(), b.pairs.size());
      if (p.branch == "case1") {
        for (auto op : p.ops) EXPECT_EQ(op, SwapOp::B);
      }
    }
  }
  EXPECT_GT(seen["case1"], 0);
  EXPECT_GT(seen["case2-odd"], 0);
  EXPECT_GT(seen["case2-even"], 0);
}

TEST(SwapRewrite, ReexpansionAgreesAtRandomPoints) {
  std::mt19937 rng(7);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    for (const auto& t : family(n, m)) {
      if (defect_profile(split(t, m)).defects.empty()) continue;
      SwapResult r = swap_rewrite(t, m);
      ASSERT_TRUE(r.ok()) << t.to_string();
      for (const auto& c : r.rearranged) EXPECT_LT(c[0], c[1]);
      for (int trial = 0; trial < 2; ++trial) {
        PointMatrix x = random_point(n, rng);
        Rational lhs = eval_tableau(t, x);
        Rational rhs = evaluate(r.mu_prime, x) * evaluate(r.nu_prime, x) + evaluate(r.corrections, x);
        EXPECT_EQ(lhs, rhs) << t.to_string();
      }
      for (const auto& [mono, c] : r.corrections.terms())
        EXPECT_TRUE(deglex_compare(mono.to_tableau(2, n), t) < 0);
      ContentVector mc = content_of(r.mu_prime.columns(), n);
      for (int v = 1; v <= n; ++v) EXPECT_EQ(mc[v], 2);
    }
  }
}

TEST(SwapRewrite, ResolvedSignsAreNonzeroForBottomAndTopSwaps) {
  for (const auto& t : family(5, 3)) {
    if (defect_profile(split(t, 3)).defects.empty()) continue;
    SwapResult r = swap_rewrite(t, 3);
    for (const auto& s : r.signs) {
      if (s.op == SwapOp::C || s.op == SwapOp::N) {
        EXPECT_EQ(s.sigma, 0);
      } else {
        EXPECT_TRUE(s.sigma == 1 || s.sigma == -1 || s.sigma == 0);
      }
    }
  }
}

TEST(Factorize, DegreeOneFactorsAndExactValue) {
  std::mt19937 rng(11);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    Factorizer fz;
    for (const auto& t : family(n, m)) {
      const Factorization& f = fz.factorize(t);
      ASSERT_FALSE(f.empty());
      PointMatrix x = random_point(n, rng);
      Rational sum = 0;
      for (const auto& [prod, c] : f) {
        EXPECT_EQ(static_cast<int>(prod.size()), m);
        Rational v = c;
        for (const auto& s : prod) {
          EXPECT_EQ(s.cols(), n);
          for (int y = 1; y <= n; ++y) EXPECT_EQ(s.content()[y], 2);
          v *= eval_tableau(s, x);
        }
        sum += v;
      }
      EXPECT_EQ(sum, eval_tableau(t, x)) << t.to_string();
    }
    EXPECT_GT(fz.stats().rewrites, 0);
  }
}

TEST(BaseCase, DeglexMinimalSplitsIntoShiftedSelections) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}, {7, 3}}) {
    Tableau t = deglex_minimal_invariant(n, m);
    for (const auto& s : family(n, m)) EXPECT_TRUE(deglex_compare(t, s) <= 0);
    auto sel = shifted_selections(t, m);
    ASSERT_EQ(static_cast<int>(sel.size()), m);
    std::vector<ColumnTuple> all;
    for (const auto& s : sel) {
      for (int y = 1; y <= n; ++y) EXPECT_EQ(s.content()[y], 2);
      all.insert(all.end(), s.columns().begin(), s.columns().end());
    }
    EXPECT_EQ(Tableau::from_multiset(all, 2, n), t);
  }
}

TEST(Surjectivity, RankMatchesInvariantCount) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {5, 3}, {7, 2}}) {
    SurjectivityReport r = surjectivity_oracle(n, m);
    EXPECT_TRUE(r.equal()) << n << "," << m;
    EXPECT_EQ(r.dim_rm, static_cast<long long>(family(n, m).size()));
  }
  SurjectivityReport s = surjectivity_oracle(5, 2, ColumnTuple(5, {3, 5}), ColumnTuple::identity(2, 5));
  EXPECT_TRUE(s.equal());
}

TEST(Surjectivity, EvaluationRankOracle) {
  // Rank of degree-m products as functions on random points equals the rank of
  // the standard invariants, with no straightening involved.
  std::mt19937 rng(5);
  const int n = 5, m = 2;
  auto r1 = family(n, 1), rm = family(n, m);
  std::vector<PointMatrix> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(random_point(n, rng));
  QMatrix prod(static_cast<int>(r1.size() * r1.size()), static_cast<int>(pts.size()));
  int row = 0;
  for (const auto& a : r1)
    for (const auto& b : r1) {
      for (std::size_t k = 0; k < pts.size(); ++k) prod(row, static_cast<int>(k)) = eval_tableau(a, pts[k]) * eval_tableau(b, pts[k]);
      ++row;
    }
  QMatrix basis(static_cast<int>(rm.size()), static_cast<int>(pts.size()));
  for (std::size_t i = 0; i < rm.size(); ++i)
    for (std::size_t k = 0; k < pts.size(); ++k) basis(static_cast<int>(i), static_cast<int>(k)) = eval_tableau(rm[i], pts[k]);
  EXPECT_EQ(rank(basis), static_cast<int>(rm.size()));
  EXPECT_EQ(rank(prod), static_cast<int>(rm.size()));
}

TEST(FamilyAudit, ExhaustiveAndSampled) {
  FamilyAudit a = audit_family(5, 2, std::nullopt, 1);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.checked, 16);
  FamilyAudit b = audit_family(7, 2, std::size_t{20}, 3), c = audit_family(7, 2, std::size_t{20}, 3);
  EXPECT_EQ(b.checked, 20);
  EXPECT_EQ(b.passes, c.passes);
  EXPECT_TRUE(b.ok());
}

TEST(Split, DegreeOneAndMinimalTableau) {
  for (const auto& t : family(5, 1)) {
    MuNuSplit s = split(t, 1);
    EXPECT_EQ(s.mu, t);
    EXPECT_EQ(s.nu.cols(), 0);
    EXPECT_EQ(factorize(t), (Factorization{{{t}, 1}}));
  }
  MuNuSplit s = split(deglex_minimal_invariant(5, 2), 2);
  for (int x = 1; x <= 5; ++x) EXPECT_EQ(s.mu.content()[x], 2);
  EXPECT_TRUE(defect_profile(s).defects.empty());
}

TEST(ModMSymmetry, GammaTwoFiveDegreeOne) {
  Tableau g = gamma_tableau(2, 5);
  RowPositions p = mod_m_symmetry(g, 1, 3);
  ASSERT_TRUE(p.applicable);
  EXPECT_EQ(g.at(0, *p.f_top - 1), 3);
  EXPECT_EQ(g.at(1, *p.f_bottom - 1), 3);
  EXPECT_TRUE(p.holds);
}

TEST(SwapRewrite, DefectFreeIsIdentity) {
  int seen = 0;
  for (const auto& t : family(7, 2)) {
    DefectProfile d = defect_profile(split(t, 2));
    if (!d.defects.empty()) continue;
    ++seen;
    EXPECT_TRUE(s_blocks(t, 2, d).empty());
    SwapResult r = swap_rewrite(t, 2);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.corrections.is_zero());
    EXPECT_EQ(r.rearranged, t.columns());
    EXPECT_TRUE(r.branches.empty());
  }
  EXPECT_GT(seen, 0);
}
