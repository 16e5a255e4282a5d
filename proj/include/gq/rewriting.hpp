#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gq/errors.hpp"
#include "gq/g37.hpp"
#include "gq/linalg.hpp"
#include "gq/sparse_poly.hpp"

namespace gq {

using YMonomial = Exponents;

struct Rule {
  std::string label;
  YMonomial lhs;
  YPoly rhs;
};

/// Oriented commutative rules over Y_1..Y_k, graded lex with Y_1 > ... > Y_k.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(int generators, std::vector<Rule> rules) : k_(generators), rules_(std::move(rules)) {
    if (k_ < 1) throw ConfigurationError("rewrite system needs at least one generator");
    GradedLex less;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Rule& r = rules_[i];
      if (r.lhs.generators() != k_) throw ConfigurationError("rule " + r.label + ": generator count mismatch");
      if (r.lhs.degree() == 0) throw ConfigurationError("rule " + r.label + ": constant left-hand side");
      for (const auto& [m, c] : r.rhs.terms()) {
        if (m.generators() != k_) throw ConfigurationError("rule " + r.label + ": generator count mismatch");
        if (!less(m, r.lhs))
          throw ConfigurationError("rule " + r.label + ": " + monomial_to_string(m) + " is not below " +
                                   monomial_to_string(r.lhs));
      }
      for (std::size_t j = 0; j < i; ++j)
        if (rules_[j].lhs == r.lhs) throw ConfigurationError("duplicate left-hand side " + monomial_to_string(r.lhs));
    }
  }

  int generators() const { return k_; }
  const std::vector<Rule>& rules() const& { return rules_; }
  std::vector<Rule> rules() && { return std::move(rules_); }

  /// Index of the first rule whose lhs divides m.
  std::optional<std::size_t> applicable(const YMonomial& m) const {
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (rules_[i].lhs.divides(m)) return i;
    return std::nullopt;
  }

  /// One rewrite step of m by rule i: (m / lhs) * rhs.
  YPoly apply(const YMonomial& m, std::size_t i) const {
    const Rule& r = rules_.at(i);
    return YPoly(quotient(m, r.lhs)) * r.rhs;
  }

 private:
  int k_ = 0;
  std::vector<Rule> rules_;
};

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline long long read_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i) throw ArgumentError("expected a number at position " + std::to_string(start) + " in '" + s + "'");
  return std::stoll(s.substr(start, i - start));
}

}  // namespace detail

/// Parses e.g. "Y3^2 - Y3*Y7", "2*Y1*Y2 + 1/3*Y4", "0".
inline YPoly parse_ypoly(const std::string& text, int generators) {
  YPoly out;
  std::size_t i = 0;
  bool any = false;
  while (true) {
    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      detail::skip_ws(text, i);
    } else if (any) {
      throw ArgumentError("expected '+' or '-' in '" + text + "'");
    }
    Rational coef = 1;
    std::vector<int> e(static_cast<std::size_t>(generators), 0);
    bool factor_seen = false;
    while (true) {
      detail::skip_ws(text, i);
      if (i < text.size() && (text[i] == 'Y' || text[i] == 'y')) {
        ++i;
        long long v = detail::read_int(text, i);
        if (v < 1 || v > generators) throw ArgumentError("generator Y" + std::to_string(v) + " out of range");
        long long p = 1;
        detail::skip_ws(text, i);
        if (i < text.size() && text[i] == '^') {
          ++i;
          detail::skip_ws(text, i);
          p = detail::read_int(text, i);
        }
        e[static_cast<std::size_t>(v - 1)] += static_cast<int>(p);
      } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        coef *= parse_rational(text.substr(start, i - start));
      } else {
        throw ArgumentError("unexpected input in '" + text + "'");
      }
      factor_seen = true;
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!factor_seen) throw ArgumentError("empty term in '" + text + "'");
    out.add_term(YMonomial(e), sign * coef);
    any = true;
  }
  if (!any) throw ArgumentError("empty polynomial");
  return out;
}

/// Rule file: one `[label:] LHS -> RHS` per line, '#' starts a comment.
/// The generator count is the largest index mentioned unless given.
inline RewriteSystem parse_rules(const std::string& text, int generators = 0) {
  struct Line {
    std::string label, lhs, rhs;
  };
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int max_index = generators;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto arrow = raw.find("->");
    if (arrow == std::string::npos) throw ArgumentError("line " + std::to_string(lineno) + ": missing '->'");
    Line l;
    std::string left = raw.substr(0, arrow);
    if (auto colon = left.find(':'); colon != std::string::npos) {
      l.label = left.substr(0, colon);
      l.label.erase(0, l.label.find_first_not_of(" \t"));
      l.label.erase(l.label.find_last_not_of(" \t") + 1);
      left.erase(0, colon + 1);
    } else {
      l.label = "r" + std::to_string(lines.size() + 1);
    }
    l.lhs = left;
    l.rhs = raw.substr(arrow + 2);
    for (const std::string* part : {&l.lhs, &l.rhs})
      for (std::size_t i = 0; i < part->size(); ++i)
        if ((*part)[i] == 'Y' || (*part)[i] == 'y') {
          std::size_t j = i + 1;
          if (j < part->size() && std::isdigit(static_cast<unsigned char>((*part)[j])))
            max_index = std::max(max_index, static_cast<int>(detail::read_int(*part, j)));
        }
    lines.push_back(std::move(l));
  }
  if (max_index == 0) max_index = 1;
  std::vector<Rule> rules;
  for (const auto& l : lines) {
    YPoly lhs = parse_ypoly(l.lhs, max_index);
    if (lhs.size() != 1 || lhs.leading().second != 1)
      throw ArgumentError("rule " + l.label + ": left-hand side must be a single monic monomial");
    rules.push_back({l.label, lhs.leading().first, parse_ypoly(l.rhs, max_index)});
  }
  return RewriteSystem(max_index, std::move(rules));
}

inline RewriteSystem parse_rules_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw NotFound("cannot open rule file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_rules(ss.str());
}

/// Rules 1a..1f on seven generators.
inline RewriteSystem g37_rewrite_system() {
  std::vector<Rule> rules;
  auto mono = [](const std::vector<int>& idx) {
    std::vector<int> e(7, 0);
    for (int i : idx) ++e[static_cast<std::size_t>(i - 1)];
    return YMonomial(e);
  };
  for (const auto& rel : g37::relations()) {
    YPoly rhs;
    for (const auto& [c, idx] : rel.rhs) rhs.add_term(mono(idx), c);
    rules.push_back({rel.label, mono(rel.lhs), rhs});
  }
  return RewriteSystem(7, std::move(rules));
}

struct ReduceStats {
  long long steps = 0;
};

/// Normal form: repeatedly rewrites the largest reducible monomial with the
/// first applicable rule.
inline YPoly reduce(const YPoly& p, const RewriteSystem& R, ReduceStats* stats = nullptr) {
  std::map<YMonomial, Rational, GradedLex> pending(p.terms().begin(), p.terms().end());
  YPoly out;
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    const YMonomial m = it->first;
    const Rational c = it->second;
    pending.erase(it);
    if (c == 0) continue;
    auto rule = R.applicable(m);
    if (!rule) {
      out.add_term(m, c);
      continue;
    }
    if (stats) ++stats->steps;
    const YPoly step = R.apply(m, *rule);
    for (const auto& [m2, c2] : step.terms()) pending[m2] += c * c2;
  }
  return out;
}

inline bool is_normal(const YMonomial& m, const RewriteSystem& R) { return !R.applicable(m).has_value(); }

struct Ambiguity {
  YMonomial overlap;
  std::size_t rule_a, rule_b;
};

struct AmbiguityScan {
  std::vector<Ambiguity> overlaps;
  int coprime_pairs_skipped = 0;  // joinable automatically in the commutative case
};

inline AmbiguityScan ambiguities(const RewriteSystem& R) {
  AmbiguityScan scan;
  const auto& rs = R.rules();
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = i + 1; j < rs.size(); ++j) {
      if (rs[i].lhs.coprime(rs[j].lhs)) {
        ++scan.coprime_pairs_skipped;
        continue;
      }
      scan.overlaps.push_back({lcm(rs[i].lhs, rs[j].lhs), i, j});
    }
  return scan;
}

/// All monomials of total degree d in k generators, increasing in GradedLex.
inline std::vector<YMonomial> monomials_of_degree(int k, int d) {
  std::vector<YMonomial> out;
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == k - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.emplace_back(e);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (k > 0) rec(rec, 0, d);
  return out;
}

struct AmbiguityResult {
  Ambiguity ambiguity;
  YPoly via_a, via_b;
  bool joined() const { return via_a == via_b; }
};

struct ConfluenceReport {
  std::vector<AmbiguityResult> results;
  int coprime_pairs_skipped = 0;
  int through_degree = 0;
  long long monomials_checked = 0;
  bool exhaustive_ok = true;
  std::optional<YMonomial> counterexample;
  std::vector<YPoly> counterexample_forms;

  bool confluent() const {
    for (const auto& r : results)
      if (!r.joined()) return false;
    return exhaustive_ok;
  }
};

/// Diamond-lemma check: every overlap joins, and every monomial of degree
/// <= through_degree has one normal form whichever rule is applied first
/// (by induction along the order, using normal forms of smaller monomials).
inline ConfluenceReport check_confluence(const RewriteSystem& R, int through_degree) {
  ConfluenceReport rep;
  rep.through_degree = through_degree;
  AmbiguityScan scan = ambiguities(R);
  rep.coprime_pairs_skipped = scan.coprime_pairs_skipped;
  for (const auto& a : scan.overlaps)
    rep.results.push_back({a, reduce(R.apply(a.overlap, a.rule_a), R), reduce(R.apply(a.overlap, a.rule_b), R)});

  std::map<YMonomial, YPoly, GradedLex> nf;
  auto nf_of = [&](const YPoly& p) {
    YPoly out;
    for (const auto& [m, c] : p.terms()) {
      auto it = nf.find(m);
      if (it == nf.end()) throw InvariantViolation("normal form requested out of order for " + monomial_to_string(m));
      out += c * it->second;
    }
    return out;
  };
  for (int d = 0; d <= through_degree && rep.exhaustive_ok; ++d)
    for (const auto& m : monomials_of_degree(R.generators(), d)) {
      ++rep.monomials_checked;
      std::vector<YPoly> forms;
      for (std::size_t i = 0; i < R.rules().size(); ++i)
        if (R.rules()[i].lhs.divides(m)) forms.push_back(nf_of(R.apply(m, i)));
      if (forms.empty()) {
        nf[m] = YPoly(m);
        continue;
      }
      for (const auto& f : forms)
        if (!(f == forms.front())) {
          rep.exhaustive_ok = false;
          rep.counterexample = m;
          rep.counterexample_forms = forms;
          break;
        }
      nf[m] = forms.front();
      if (!rep.exhaustive_ok) break;
    }
  return rep;
}

inline long long normal_form_count(const RewriteSystem& R, int m) {
  long long count = 0;
  for (const auto& mono : monomials_of_degree(R.generators(), m))
    if (is_normal(mono, R)) ++count;
  return count;
}

struct ScrollMinor {
  int col_a, col_b;  // 1-based
  YPoly minor, reduced;
  std::string matches_rule;  // label of the rule equal to +-minor, if any
};

struct ScrollReport {
  std::vector<ScrollMinor> minors;
  bool all_vanish() const {
    for (const auto& m : minors)
      if (!m.reduced.is_zero()) return false;
    return true;
  }
};

/// The 2 x 4 matrix [[Y1, Y3, Y4, Y2], [Y3 - Y7, Y5, Y6, Y4 - Y7]].
inline Matrix<YPoly> scroll_matrix() {
  auto y = [](int i) { return YPoly(YMonomial::variable(7, i)); };
  Matrix<YPoly> m(2, 4);
  m(0, 0) = y(1), m(0, 1) = y(3), m(0, 2) = y(4), m(0, 3) = y(2);
  m(1, 0) = y(3) - y(7), m(1, 1) = y(5), m(1, 2) = y(6), m(1, 3) = y(4) - y(7);
  return m;
}

inline ScrollReport scroll_matrix_check(const RewriteSystem& R) {
  if (R.generators() != 7) throw ArgumentError("scroll matrix is defined over seven generators");
  Matrix<YPoly> a = scroll_matrix();
  ScrollReport rep;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      YPoly minor = a(0, i) * a(1, j) - a(0, j) * a(1, i);
      ScrollMinor sm{i + 1, j + 1, minor, reduce(minor, R), ""};
      for (const auto& rule : R.rules()) {
        YPoly rel = YPoly(rule.lhs) - rule.rhs;
        if (rel == minor || rel == -minor) sm.matches_rule = rule.label;
      }
      rep.minors.push_back(std::move(sm));
    }
  return rep;
}

}  // namespace gq
