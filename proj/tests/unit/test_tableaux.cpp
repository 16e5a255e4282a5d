#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "gq/tableaux.hpp"
#include "gq/weyl_grassmann.hpp"

using namespace gq;

namespace {

ColumnTuple c7(int a, int b, int c) { return ColumnTuple(7, {a, b, c}); }

// Independent slow enumerator: builds the tableau cell by cell in row-major
// order, enforcing row/column monotonicity and content, then filters by the
// Bruhat bounds on the finished tableau.
std::vector<Tableau> slow_invariants(int r, int n, int m, const ColumnTuple& w, const ColumnTuple& v) {
  const int d = m * n;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(d)));
  std::vector<int> used(static_cast<std::size_t>(n + 1), 0);
  std::set<Tableau> out;
  std::function<void(int)> fill = [&](int cell) {
    if (cell == r * d) {
      Tableau t = Tableau::from_rows(n, grid);
      if (bruhat_leq(v, t.column(0)) && bruhat_leq(t.column(d - 1), w)) out.insert(t);
      return;
    }
    const int i = cell / d, j = cell % d;
    int lo = 1;
    if (j > 0) lo = std::max(lo, grid[i][j - 1]);
    if (i > 0) lo = std::max(lo, grid[i - 1][j] + 1);
    const int hi = n - (r - 1 - i);
    for (int x = lo; x <= hi; ++x) {
      if (used[x] == r * m) continue;
      ++used[x];
      grid[i][j] = x;
      fill(cell + 1);
      --used[x];
    }
  };
  fill(0);
  return {out.begin(), out.end()};
}

}  // namespace

TEST(ZeroWeight, Basics) {
  EXPECT_TRUE(is_zero_weight(gamma_tableau(3, 7)));
  EXPECT_TRUE(is_zero_weight(g37::y(2)));
  EXPECT_FALSE(is_zero_weight(Tableau::from_rows(4, {{1, 1}, {2, 3}})));
}

TEST(Enumerate, DegreeOneIsY1ToY7) {
  auto ts = enumerate_invariants(3, 7, 1, g37::w(), g37::identity());
  ASSERT_EQ(ts.size(), 7u);
  std::set<Tableau> got(ts.begin(), ts.end()), want;
  for (const auto& y : g37::y_all()) want.insert(y);
  EXPECT_EQ(got, want);
  EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
  std::vector<Tableau> order = {g37::y(7), g37::y(6), g37::y(4), g37::y(5), g37::y(3), g37::y(2), g37::y(1)};
  EXPECT_EQ(ts, order);
}

TEST(Enumerate, UniqueOnMinimalRichardson) {
  auto ts = enumerate_invariants(3, 7, 1, g37::w(), minimal_richardson_v(3, 7));
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0], gamma_tableau(3, 7));
  for (int n : {3, 5, 7, 9}) {
    auto g2 = enumerate_invariants(2, n, 1, minimal_schubert(2, n), minimal_richardson_v(2, n));
    ASSERT_EQ(g2.size(), 1u) << n;
    EXPECT_EQ(g2[0], gamma_tableau(2, n));
  }
}

TEST(Enumerate, DegreeTwoContainsZ20AndMatchesSlowOracle) {
  auto ts = enumerate_invariants(3, 7, 2, g37::w(), g37::identity());
  EXPECT_NE(std::find(ts.begin(), ts.end(), g37::z20()), ts.end());
  auto slow = slow_invariants(3, 7, 2, g37::w(), g37::identity());
  EXPECT_EQ(ts, slow);
}

TEST(Enumerate, SmallFamiliesMatchSlowOracle) {
  struct Case { int r, n, m; };
  for (Case k : {Case{2, 5, 1}, Case{2, 5, 2}, Case{2, 5, 3}, Case{2, 7, 1}, Case{2, 7, 2}, Case{3, 5, 1}, Case{3, 4, 2}}) {
    ColumnTuple w = ColumnTuple::top(k.r, k.n), v = ColumnTuple::identity(k.r, k.n);
    if (std::gcd(k.r, k.n) == 1) w = minimal_schubert(k.r, k.n);
    auto fast = enumerate_invariants(k.r, k.n, k.m, w, v);
    auto slow = slow_invariants(k.r, k.n, k.m, w, v);
    EXPECT_EQ(fast, slow) << k.r << "," << k.n << "," << k.m;
    EXPECT_EQ(count_invariants(k.r, k.n, k.m, w, v), fast.size());
  }
  EXPECT_EQ(enumerate_invariants(2, 5, 2, ColumnTuple::top(2, 5), ColumnTuple::identity(2, 5)).size(), 16u);
  EXPECT_EQ(enumerate_invariants(2, 5, 3, ColumnTuple::top(2, 5), ColumnTuple::identity(2, 5)).size(), 31u);
  EXPECT_EQ(enumerate_invariants(2, 7, 2, ColumnTuple::top(2, 7), ColumnTuple::identity(2, 7)).size(), 260u);
}

TEST(Enumerate, EmptyWhenBoundsIncomparable) {
  EXPECT_TRUE(enumerate_invariants(3, 7, 1, c7(1, 2, 3), c7(3, 5, 7)).empty());
  EXPECT_TRUE(enumerate_invariants(3, 7, 1, c7(1, 4, 7), c7(3, 5, 6)).empty());
}

TEST(Enumerate, OutputsSatisfyContract) {
  for (int m = 1; m <= 2; ++m)
    for (const auto& t : enumerate_invariants(3, 7, m, g37::w(), g37::identity())) {
      EXPECT_TRUE(is_zero_weight(t));
      EXPECT_TRUE(is_semistandard(t.columns()));
      EXPECT_TRUE(bruhat_leq(t.column(t.cols() - 1), g37::w()));
      EXPECT_EQ(t.cols(), 7 * m);
    }
}

TEST(FirstColumn, WorkedExamples) {
  EXPECT_EQ(first_column_class(g37::y(7)), c7(1, 2, 3));
  EXPECT_EQ(first_column_class(g37::y(5)), c7(1, 2, 5));
  EXPECT_EQ(first_column_class(g37::y(1)), c7(1, 3, 5));
}

TEST(Census, WorkedExamples) {
  ColumnCensus z(g37::z20());
  EXPECT_EQ(z.degree(), 2);
  EXPECT_EQ(z.count(c7(2, 4, 6)), 2);
  EXPECT_TRUE(z.forbidden_absent());
  EXPECT_EQ(ColumnCensus(g37::y(6)).count(c7(2, 4, 6)), 1);
  ColumnCensus y1(g37::y(1));
  EXPECT_EQ(y1.count(c7(3, 5, 7)), 1);
  EXPECT_TRUE(y1.count_x57_at_least_2m());
}

TEST(Census, ColumnRulesHoldUpToDegreeTwo) {
  for (int m = 1; m <= 2; ++m)
    for (const auto& t : enumerate_invariants(3, 7, m, g37::w(), g37::identity())) {
      ColumnCensus c(t);
      EXPECT_TRUE(c.failures().empty()) << t.to_string();
    }
}

TEST(Deglex, Basics) {
  Tableau a = Tableau::from_rows(4, {{1, 3}, {2, 4}});
  Tableau b = Tableau::from_rows(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(deglex_compare(a, a), std::strong_ordering::equal);
  EXPECT_EQ(deglex_compare(a, b), std::strong_ordering::less);
  Tableau longer = Tableau::from_rows(4, {{1, 1, 3, 3}, {2, 2, 4, 4}});
  EXPECT_EQ(deglex_compare(longer, b), std::strong_ordering::greater);
}

TEST(Deglex, TotalOrderOnEnumeration) {
  std::vector<Tableau> all;
  for (int m = 1; m <= 2; ++m)
    for (auto& t : enumerate_invariants(3, 7, m, g37::w(), g37::identity())) all.push_back(t);
  auto less = [](const Tableau& s, const Tableau& t) { return deglex_compare(s, t) < 0; };
  std::vector<Tableau> sorted = all;
  std::sort(sorted.begin(), sorted.end(), less);
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    EXPECT_TRUE(deglex_compare(sorted[i], sorted[i + 1]) < 0);
    EXPECT_TRUE(deglex_compare(sorted[i + 1], sorted[i]) > 0);
  }
}

TEST(FactorLemma, Z20IsItsOwnWitness) {
  FactorWitness w = factor_lemma_witness(g37::z20());
  EXPECT_EQ(w.tag, "z20");
  EXPECT_TRUE(w.complement.empty());
}

TEST(FactorLemma, ConstructedProduct) {
  std::vector<ColumnTuple> cols = g37::y(1).columns();
  const Tableau y2 = g37::y(2);
  for (const auto& c : y2.columns()) cols.push_back(c);
  FactorWitness w = factor_lemma_witness(Tableau::from_multiset(cols, 3, 7));
  EXPECT_TRUE(w.tag == "y1" || w.tag == "y2");
  EXPECT_EQ(w.complement, w.tag == "y1" ? g37::y(2) : g37::y(1));
}

TEST(FactorLemma, EveryDegreeTwoAndThreeInvariant) {
  for (int m = 2; m <= 3; ++m)
    for (const auto& t : enumerate_invariants(3, 7, m, g37::w(), g37::identity())) {
      FactorWitness w = factor_lemma_witness(t);
      const int expect = m - (w.tag == "z20" ? 2 : 1);
      EXPECT_EQ(w.complement.cols(), 7 * expect);
      if (!w.complement.empty()) {
        EXPECT_TRUE(is_zero_weight(w.complement));
        EXPECT_TRUE(bruhat_leq(w.complement.column(w.complement.cols() - 1), g37::w()));
      }
    }
}
