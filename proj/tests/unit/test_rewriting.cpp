#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gq/rewriting.hpp"
#include "gq/tableaux.hpp"

using namespace gq;

namespace {

YPoly Y(const std::string& s) { return parse_ypoly(s, 7); }
YMonomial M(const std::string& s) { return Y(s).leading().first; }

const AmbiguityResult* find_overlap(const ConfluenceReport& rep, const std::string& mono) {
  for (const auto& r : rep.results)
    if (r.ambiguity.overlap == M(mono)) return &r;
  return nullptr;
}

}  // namespace

TEST(Parser, RoundTripAndErrors) {
  EXPECT_EQ(Y("Y3^2 - Y3*Y7").to_string(), "Y3^2 - Y3*Y7");
  EXPECT_EQ(Y("2*Y1 + 1/2*Y2*Y2").to_string(), "1/2*Y2^2 + 2*Y1");
  EXPECT_EQ(Y("-Y7").to_string(), "-Y7");
  EXPECT_THROW(Y("Y8"), ArgumentError);
  EXPECT_THROW(Y("Y1 Y2"), ArgumentError);
  EXPECT_THROW(parse_rules("Y1*Y2 Y3"), ArgumentError);
}

TEST(RuleSystem, FileMatchesBuiltIn) {
  std::ifstream f(GQ_SOURCE_DIR "/rules/g37.rules");
  ASSERT_TRUE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  RewriteSystem parsed = parse_rules(ss.str());
  RewriteSystem builtin = g37_rewrite_system();
  ASSERT_EQ(parsed.rules().size(), builtin.rules().size());
  for (std::size_t i = 0; i < parsed.rules().size(); ++i) {
    EXPECT_EQ(parsed.rules()[i].label, builtin.rules()[i].label);
    EXPECT_EQ(parsed.rules()[i].lhs, builtin.rules()[i].lhs);
    EXPECT_EQ(parsed.rules()[i].rhs, builtin.rules()[i].rhs);
  }
}

TEST(RuleSystem, OrderViolationIsConfigurationError) {
  EXPECT_THROW(parse_rules("Y2 -> Y1"), ConfigurationError);
  EXPECT_THROW(parse_rules("Y1*Y2 -> Y3\nY1*Y2 -> Y4"), ConfigurationError);
  EXPECT_NO_THROW(parse_rules("Y1*Y2 -> Y3^2"));
}

TEST(RuleSystem, EveryRhsBelowLhs) {
  GradedLex less;
  for (const auto& r : g37_rewrite_system().rules())
    for (const auto& [m, c] : r.rhs.terms()) EXPECT_TRUE(less(m, r.lhs)) << r.label;
}

TEST(Reduce, Examples) {
  RewriteSystem R = g37_rewrite_system();
  EXPECT_EQ(reduce(Y("Y1*Y5"), R), Y("Y3^2 - Y3*Y7"));
  EXPECT_EQ(reduce(Y("Y1*Y2*Y5"), R), Y("Y2*Y3^2 - Y2*Y3*Y7"));
  for (int k = 0; k <= 6; ++k) {
    YMonomial m(std::vector<int>{0, 0, 0, 0, 0, 0, k});
    EXPECT_EQ(reduce(YPoly(m), R), YPoly(m));
  }
}

TEST(Reduce, TerminatesAndIsNormalThroughDegreeFour) {
  RewriteSystem R = g37_rewrite_system();
  for (int d = 0; d <= 4; ++d)
    for (const auto& m : monomials_of_degree(7, d)) {
      ReduceStats st;
      YPoly nf = reduce(YPoly(m), R, &st);
      EXPECT_LE(st.steps, 1000);
      for (const auto& [mm, c] : nf.terms()) EXPECT_TRUE(is_normal(mm, R));
    }
}

TEST(Ambiguities, ContainsListedOverlaps) {
  RewriteSystem R = g37_rewrite_system();
  AmbiguityScan scan = ambiguities(R);
  EXPECT_EQ(scan.overlaps.size(), 8u);
  EXPECT_EQ(scan.coprime_pairs_skipped, 7);
  std::vector<std::string> want = {"Y1*Y2*Y5", "Y1*Y2*Y6", "Y1*Y3*Y6", "Y2*Y3*Y6", "Y2*Y5*Y6",
                                   "Y1*Y4*Y5", "Y1*Y4*Y6", "Y1*Y5*Y6"};
  for (const auto& w : want) {
    bool found = false;
    for (const auto& a : scan.overlaps) found = found || a.overlap == M(w);
    EXPECT_TRUE(found) << w;
  }
  for (const auto& a : scan.overlaps) {
    if (a.overlap == M("Y1*Y2*Y5")) {
      EXPECT_EQ(R.rules()[a.rule_a].label, "1b");
      EXPECT_EQ(R.rules()[a.rule_b].label, "1d");
    }
    if (a.overlap == M("Y1*Y3*Y6")) {
      EXPECT_EQ(R.rules()[a.rule_a].label, "1c");
      EXPECT_EQ(R.rules()[a.rule_b].label, "1f");
    }
  }
  EXPECT_TRUE(ambiguities(parse_rules("Y1^2 -> Y3\nY2^2 -> Y3")).overlaps.empty());
}

TEST(Confluence, G37ThroughDegreeFour) {
  ConfluenceReport rep = check_confluence(g37_rewrite_system(), 4);
  EXPECT_TRUE(rep.confluent());
  EXPECT_TRUE(rep.exhaustive_ok);
  EXPECT_EQ(rep.monomials_checked, 330);
  const AmbiguityResult* a = find_overlap(rep, "Y1*Y2*Y6");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->via_a, Y("Y2*Y3*Y4 - Y2*Y4*Y7"));
  a = find_overlap(rep, "Y2*Y5*Y6");
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->via_a, Y("Y4^2*Y5 - Y4*Y5*Y7"));
  a = find_overlap(rep, "Y2*Y3*Y6");
  ASSERT_NE(a, nullptr);
  EXPECT_TRUE(a->joined());
  EXPECT_EQ(a->via_a, Y("Y3*Y4^2 - Y3*Y4*Y7"));
}

TEST(Confluence, EmptyAndBrokenSystems) {
  EXPECT_TRUE(check_confluence(RewriteSystem(3, {}), 4).confluent());
  // Overlap Y1*Y2*Y3 gives Y3^3 one way and Y1*Y3*Y4 the other.
  RewriteSystem bad = parse_rules("Y1*Y2 -> Y3^2\nY2*Y3 -> Y3*Y4");
  ConfluenceReport rep = check_confluence(bad, 3);
  EXPECT_FALSE(rep.confluent());
  EXPECT_TRUE(rep.counterexample.has_value());
}

TEST(NormalForms, Counts) {
  RewriteSystem R = g37_rewrite_system();
  EXPECT_EQ(normal_form_count(R, 1), 7);
  EXPECT_EQ(normal_form_count(R, 2), 22);
  for (int m = 1; m <= 3; ++m)
    EXPECT_EQ(static_cast<std::size_t>(normal_form_count(R, m)), count_invariants(3, 7, m, g37::w(), g37::identity()));
}

TEST(Scroll, MinorsReduceToZero) {
  ScrollReport rep = scroll_matrix_check(g37_rewrite_system());
  ASSERT_EQ(rep.minors.size(), 6u);
  EXPECT_TRUE(rep.all_vanish());
  EXPECT_EQ(rep.minors[0].matches_rule, "1b");
  EXPECT_EQ(rep.minors[1].matches_rule, "1c");
  int matched = 0;
  for (const auto& m : rep.minors) matched += m.matches_rule.empty() ? 0 : 1;
  EXPECT_EQ(matched, 6);
}
