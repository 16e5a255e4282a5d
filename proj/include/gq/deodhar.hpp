#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gq/column_tuple.hpp"
#include "gq/errors.hpp"
#include "gq/g37.hpp"
#include "gq/linalg.hpp"
#include "gq/permutation.hpp"
#include "gq/sparse_poly.hpp"
#include "gq/tableau.hpp"
#include "gq/tableaux.hpp"
#include "gq/weyl_grassmann.hpp"

namespace gq {

/// Monomial in the cell parameters; variable k belongs to letter position k.
struct ParamMonomial {
  std::vector<int> e;

  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  friend std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.e <=> b.e;
  }
  friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;

  friend ParamMonomial monomial_product(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial out = a;
    if (out.e.size() < b.e.size()) out.e.resize(b.e.size(), 0);
    for (std::size_t i = 0; i < b.e.size(); ++i) out.e[i] += b.e[i];
    return out;
  }
  friend std::string monomial_to_string(const ParamMonomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "p" + std::to_string(i + 1);
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }
};

using ParamPoly = SparsePoly<ParamMonomial>;

inline ParamPoly param_constant(int vars, const Rational& c) {
  return ParamPoly(ParamMonomial{std::vector<int>(static_cast<std::size_t>(vars), 0)}, c);
}
inline ParamPoly param_variable(int vars, int k) {
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  e.at(static_cast<std::size_t>(k - 1)) = 1;
  return ParamPoly(ParamMonomial{e});
}
inline ParamPoly param_monomial(std::vector<int> exps, const Rational& c = 1) {
  return ParamPoly(ParamMonomial{std::move(exps)}, c);
}

/// Per-letter choice along a reduced word: keep the letter or use 1.
class SubexpressionMask {
 public:
  SubexpressionMask(ReducedWord word, std::vector<bool> keep) : word_(std::move(word)), keep_(std::move(keep)) {
    if (static_cast<int>(keep_.size()) != word_.length()) throw ArgumentError("mask length differs from word length");
  }

  /// Keeps exactly the given 1-based positions.
  static SubexpressionMask from_positions(const ReducedWord& word, const std::vector<int>& kept) {
    std::vector<bool> keep(static_cast<std::size_t>(word.length()), false);
    for (int p : kept) {
      if (p < 1 || p > word.length()) throw ArgumentError("mask position out of range");
      keep[static_cast<std::size_t>(p - 1)] = true;
    }
    return {word, keep};
  }

  const ReducedWord& word() const { return word_; }
  const std::vector<bool>& keep() const { return keep_; }
  bool kept(int pos) const { return keep_.at(static_cast<std::size_t>(pos - 1)); }

  std::vector<int> kept_positions() const {
    std::vector<int> out;
    for (int k = 1; k <= word_.length(); ++k)
      if (kept(k)) out.push_back(k);
    return out;
  }

  /// v_(k) for k = 0..length.
  std::vector<Permutation> prefixes() const {
    std::vector<Permutation> out{Permutation(word_.n())};
    for (int k = 1; k <= word_.length(); ++k)
      out.push_back(kept(k) ? out.back().times_simple(word_[k - 1]) : out.back());
    return out;
  }

  Permutation product() const { return prefixes().back(); }

  /// e.g. "1 1 1 1 1 1 s2 s4 s3".
  std::string to_string() const {
    std::string s;
    for (int k = 1; k <= word_.length(); ++k) {
      if (k > 1) s += " ";
      s += kept(k) ? "s" + std::to_string(word_[k - 1]) : "1";
    }
    return s;
  }

  friend bool operator==(const SubexpressionMask&, const SubexpressionMask&) = default;

 private:
  ReducedWord word_;
  std::vector<bool> keep_;
};

struct MaskClassification {
  std::vector<int> circ;    // kept at an ascent
  std::vector<int> square;  // skipped
  std::vector<int> bullet;  // kept at a descent
  bool distinguished = false;
  bool pds = false;
};

inline MaskClassification classify(const SubexpressionMask& mask) {
  MaskClassification c;
  c.distinguished = true;
  Permutation prev(mask.word().n());
  for (int k = 1; k <= mask.word().length(); ++k) {
    const int i = mask.word()[k - 1];
    const bool descent = prev.has_right_descent(i);
    if (mask.kept(k)) {
      (descent ? c.bullet : c.circ).push_back(k);
      prev = prev.times_simple(i);
    } else {
      c.square.push_back(k);
      // Skipping at a descent leaves v_(k) above v_(k-1) s.
      if (descent) c.distinguished = false;
    }
  }
  c.pds = c.distinguished && c.bullet.empty();
  return c;
}

/// Unique positive distinguished subexpression for v: scan right to left and
/// keep a letter exactly when it shortens what remains of v.
inline SubexpressionMask find_pds(const ReducedWord& word, const Permutation& v) {
  if (v.size() != word.n()) throw ArgumentError("permutation size differs from the word's group");
  std::vector<bool> keep(static_cast<std::size_t>(word.length()), false);
  Permutation u = v;
  for (int k = word.length(); k >= 1; --k) {
    const int i = word[k - 1];
    if (u.has_right_descent(i)) {
      keep[static_cast<std::size_t>(k - 1)] = true;
      u = u.times_simple(i);
    }
  }
  if (!u.is_identity()) throw NotFound(v.to_string() + " is not below " + word.evaluate().to_string());
  SubexpressionMask mask(word, keep);
  if (!classify(mask).pds) throw InvariantViolation("greedy subexpression for " + v.to_string() + " is not positive");
  return mask;
}

/// All distinguished masks with product v; only ascents branch.
inline std::vector<SubexpressionMask> enumerate_distinguished(const ReducedWord& word, const Permutation& v) {
  std::vector<SubexpressionMask> out;
  std::vector<bool> keep(static_cast<std::size_t>(word.length()), false);
  const int len = word.length();
  auto rec = [&](auto&& self, int k, const Permutation& prev) -> void {
    if (k == len) {
      if (prev == v) out.emplace_back(word, keep);
      return;
    }
    const int i = word[k];
    const Permutation taken = prev.times_simple(i);
    keep[static_cast<std::size_t>(k)] = true;
    self(self, k + 1, taken);
    if (!prev.has_right_descent(i)) {
      keep[static_cast<std::size_t>(k)] = false;
      self(self, k + 1, prev);
    }
    keep[static_cast<std::size_t>(k)] = false;
  };
  rec(rec, 0, Permutation(word.n()));
  std::sort(out.begin(), out.end(), [](const SubexpressionMask& a, const SubexpressionMask& b) {
    return a.kept_positions() < b.kept_positions();
  });
  return out;
}

using CellMatrix = Matrix<ParamPoly>;

/// Ordered product g_1 ... g_l with g = y_i(p_k) on skipped letters, s_i on
/// kept ascents and x_i(p_k) s_i on kept descents; s_i acts on the (i, i+1)
/// block as [[0, -1], [1, 0]].
inline CellMatrix cell_matrix(const SubexpressionMask& mask) {
  const MaskClassification c = classify(mask);
  if (!c.distinguished) throw ArgumentError("cell matrix needs a distinguished mask: " + mask.to_string());
  const int n = mask.word().n(), vars = mask.word().length();
  CellMatrix g(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = param_constant(vars, 1);
  auto add_col = [&](int dst, int src, const ParamPoly& f) {
    for (int r = 0; r < n; ++r)
      if (!g(r, src).is_zero()) g(r, dst) += g(r, src) * f;
  };
  auto apply_s = [&](int a, int b) {
    for (int r = 0; r < n; ++r) {
      ParamPoly old_a = g(r, a);
      g(r, a) = g(r, b);
      g(r, b) = -old_a;
    }
  };
  Permutation prev(n);
  for (int k = 1; k <= vars; ++k) {
    const int i = mask.word()[k - 1];
    const int a = i - 1, b = i;  // 0-based columns i, i+1
    if (!mask.kept(k)) {
      add_col(a, b, param_variable(vars, k));
    } else {
      if (prev.has_right_descent(i)) add_col(b, a, param_variable(vars, k));
      apply_s(a, b);
      prev = prev.times_simple(i);
    }
  }
  return g;
}

inline ParamPoly determinant(const CellMatrix& g) { return laplace_determinant(g); }

/// Pluecker coordinate p_tau on a cell matrix: rows tau, columns 1..r.
inline ParamPoly cell_minor(const CellMatrix& g, const ColumnTuple& tau) {
  std::vector<int> rows, cols;
  for (int i = 0; i < tau.rank(); ++i) rows.push_back(tau[i] - 1), cols.push_back(i);
  return laplace_determinant(g.submatrix(rows, cols));
}

/// Evaluates the standard monomial of t on the cell of mask.
inline ParamPoly restrict_section(const Tableau& t, const CellMatrix& g) {
  if (t.empty()) throw ArgumentError("cannot restrict an empty tableau");
  std::map<ColumnTuple, ParamPoly> cache;
  ParamPoly out;
  bool first = true;
  for (const auto& col : t.columns()) {
    auto it = cache.find(col);
    if (it == cache.end()) it = cache.emplace(col, cell_minor(g, col)).first;
    if (it->second.is_zero()) return {};
    out = first ? it->second : out * it->second;
    first = false;
  }
  return out;
}

inline ParamPoly restrict_section(const Tableau& t, const SubexpressionMask& mask) {
  return restrict_section(t, cell_matrix(mask));
}

/// Total degree when homogeneous; nullopt otherwise. The zero polynomial has none.
inline std::optional<int> homogeneous_degree(const ParamPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const int d = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms())
    if (m.degree() != d) return std::nullopt;
  return d;
}

/// Componentwise minimum exponent over all terms of all nonzero inputs.
inline ParamMonomial monomial_gcd(const std::vector<ParamPoly>& ps) {
  std::optional<std::vector<int>> g;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) {
      if (!g) {
        g = m.e;
        continue;
      }
      if (g->size() < m.e.size()) g->resize(m.e.size(), 0);
      for (std::size_t i = 0; i < g->size(); ++i) (*g)[i] = std::min((*g)[i], i < m.e.size() ? m.e[i] : 0);
    }
  return ParamMonomial{g.value_or(std::vector<int>{})};
}

inline ParamPoly divide_monomial(const ParamPoly& p, const ParamMonomial& d) {
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    ParamMonomial q = m;
    for (std::size_t i = 0; i < d.e.size(); ++i) {
      q.e.at(i) -= d.e[i];
      if (q.e[i] < 0) throw ArgumentError("monomial does not divide");
    }
    out.add_term(q, c);
  }
  return out;
}

/// c with a = c * b, if any.
inline std::optional<Rational> scalar_multiple(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(0) : std::nullopt;
  if (a.size() != b.size()) return std::nullopt;
  const Rational c = a.coefficient(b.leading().first) / b.leading().second;
  if (c == 0 || !(a == c * b)) return std::nullopt;
  return c;
}

inline Rational evaluate(const ParamPoly& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      for (int k = 0; k < m.e[i]; ++k) v *= point.at(i);
    total += v;
  }
  return total;
}

inline ParamPoly derivative(const ParamPoly& p, int var) {
  ParamPoly out;
  const auto idx = static_cast<std::size_t>(var - 1);
  for (const auto& [m, c] : p.terms()) {
    if (idx >= m.e.size() || m.e[idx] == 0) continue;
    ParamMonomial q = m;
    --q.e[idx];
    out.add_term(q, c * m.e[idx]);
  }
  return out;
}

/// Rank of the Jacobian at one point; full rank certifies algebraic independence.
inline int jacobian_rank_at(const std::vector<ParamPoly>& fs, int vars, const std::vector<Rational>& point) {
  QMatrix j(static_cast<int>(fs.size()), vars);
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (int v = 1; v <= vars; ++v) j(static_cast<int>(a), v - 1) = evaluate(derivative(fs[a], v), point);
  return rank(j);
}

/// Dimension of the Q-span of a list of polynomials.
inline int span_rank(const std::vector<ParamPoly>& ps) {
  std::map<ParamMonomial, int> index;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  int k = 0;
  for (auto& [m, i] : index) i = k++;
  QMatrix a(static_cast<int>(ps.size()), k);
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (const auto& [m, c] : ps[r].terms()) a(static_cast<int>(r), index[m]) = c;
  return rank(a);
}

// ---------------------------------------------------------------------------
// The four Richardson cells of X(w_{3,7}) below v_{3,7}.

enum class ProbeCase { s2s4s3, s2s3, s4s3, s3 };

inline std::string to_string(ProbeCase c) {
  switch (c) {
    case ProbeCase::s2s4s3: return "s2s4s3";
    case ProbeCase::s2s3: return "s2s3";
    case ProbeCase::s4s3: return "s4s3";
    case ProbeCase::s3: return "s3";
  }
  return "?";
}

inline ProbeCase parse_probe_case(const std::string& s) {
  for (ProbeCase c : {ProbeCase::s2s4s3, ProbeCase::s2s3, ProbeCase::s4s3, ProbeCase::s3})
    if (to_string(c) == s) return c;
  throw ArgumentError("unknown probe case '" + s + "' (expected s2s4s3, s2s3, s4s3 or s3)");
}

inline ReducedWord g37_word() { return ReducedWord(7, {2, 1, 4, 3, 6, 5, 2, 4, 3}); }

inline std::vector<int> probe_letters(ProbeCase c) {
  switch (c) {
    case ProbeCase::s2s4s3: return {2, 4, 3};
    case ProbeCase::s2s3: return {2, 3};
    case ProbeCase::s4s3: return {4, 3};
    case ProbeCase::s3: return {3};
  }
  return {};
}

struct ProbeReport {
  ProbeCase which{};
  SubexpressionMask mask{ReducedWord(), {}};
  std::vector<ParamPoly> sections;  // y1..y7 restricted
  std::vector<int> nonzero;          // 1-based y indices
  std::vector<int> expected_nonzero;
  ParamMonomial unit;                // monomial gcd of the nonzero sections
  std::vector<std::string> checks;   // "name: ok" / "name: FAILED ..."
  std::vector<std::string> resolved_signs;
  bool ok = true;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back(name + (pass ? ": ok" : ": FAILED" + (detail.empty() ? "" : " (" + detail + ")")));
    ok = ok && pass;
  }
};

namespace detail {

inline std::vector<Rational> probe_point(int vars, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(2, 97);
  std::vector<Rational> pt;
  for (int i = 0; i < vars; ++i) pt.emplace_back(d(rng));
  return pt;
}

/// Tries X = p1 + e1 p7 and B = p3 + e2 p8 for e1, e2 in {+1, -1}; each
/// section divided by the unit must be a scalar multiple of its form.
inline bool match_forms(ProbeReport& rep, const std::vector<std::pair<int, std::vector<int>>>& targets,
                        bool uses_b) {
  const int vars = 9;
  auto var = [&](int k) { return param_variable(vars, k); };
  for (int e1 : {1, -1})
    for (int e2 : uses_b ? std::vector<int>{1, -1} : std::vector<int>{1}) {
      const ParamPoly X = var(1) + Rational(e1) * var(7), Y = var(1);
      const ParamPoly A = var(3), B = var(3) + Rational(e2) * var(8);
      bool all = true;
      std::vector<std::string> scalars;
      for (const auto& [y, shape] : targets) {
        // shape = (power of X, power of Y, A-or-B flag: 0 none, 1 A, 2 B)
        ParamPoly f = param_constant(vars, 1);
        for (int k = 0; k < shape[0]; ++k) f = f * X;
        for (int k = 0; k < shape[1]; ++k) f = f * Y;
        if (shape[2] == 1) f = f * A;
        if (shape[2] == 2) f = f * B;
        auto c = scalar_multiple(divide_monomial(rep.sections[static_cast<std::size_t>(y - 1)], rep.unit), f);
        if (!c) {
          all = false;
          break;
        }
        scalars.push_back("y" + std::to_string(y) + "=" + gq::to_string(*c) + "*p*(" + f.to_string() + ")");
      }
      if (all) {
        rep.resolved_signs.push_back(std::string("X=p1") + (e1 > 0 ? "+" : "-") + "p7");
        if (uses_b) rep.resolved_signs.push_back(std::string("B=p3") + (e2 > 0 ? "+" : "-") + "p8");
        rep.resolved_signs.insert(rep.resolved_signs.end(), scalars.begin(), scalars.end());
        return true;
      }
    }
  return false;
}

}  // namespace detail

inline ProbeReport quotient_probe(ProbeCase which) {
  const ReducedWord word = g37_word();
  const Permutation v = Permutation::from_word(7, probe_letters(which));
  ProbeReport rep;
  rep.which = which;
  rep.mask = find_pds(word, v);
  const CellMatrix g = cell_matrix(rep.mask);
  for (int i = 1; i <= 7; ++i) {
    rep.sections.push_back(restrict_section(g37::y(i), g));
    if (!rep.sections.back().is_zero()) rep.nonzero.push_back(i);
  }
  std::vector<ParamPoly> nz;
  for (int i : rep.nonzero) nz.push_back(rep.sections[static_cast<std::size_t>(i - 1)]);
  rep.unit = monomial_gcd(nz);
  const auto& s = rep.sections;
  auto y = [&](int i) -> const ParamPoly& { return s[static_cast<std::size_t>(i - 1)]; };

  const long long height = restriction_height(ColumnTuple::project(v, 3));
  bool homog = true;
  for (const auto& p : nz) homog = homog && homogeneous_degree(p) == static_cast<int>(height);
  rep.check("homogeneous of degree " + std::to_string(height), homog);

  switch (which) {
    case ProbeCase::s2s4s3: {
      rep.expected_nonzero = {1};
      rep.check("nonvanishing sections", rep.nonzero == rep.expected_nonzero);
      const ParamPoly mono = param_monomial({1, 4, 2, 5, 3, 6, 0, 0, 0});
      const bool match = scalar_multiple(y(1), mono).has_value() && y(1).size() == 1 &&
                         (y(1).leading().second == 1 || y(1).leading().second == -1);
      rep.check("y1 = +-p1*p2^4*p3^2*p4^5*p5^3*p6^6", match, y(1).to_string());
      if (match) rep.resolved_signs.push_back("y1 sign " + gq::to_string(y(1).leading().second));
      break;
    }
    case ProbeCase::s2s3: {
      rep.expected_nonzero = {1, 2};
      rep.check("nonvanishing sections", rep.nonzero == rep.expected_nonzero);
      if (rep.nonzero == rep.expected_nonzero) {
        const int r = jacobian_rank_at({y(1), y(2)}, 9, detail::probe_point(9, 37));
        rep.check("y1, y2 algebraically independent (Jacobian rank 2)", r == 2, "rank " + std::to_string(r));
      }
      break;
    }
    case ProbeCase::s4s3: {
      rep.expected_nonzero = {1, 3, 5};
      rep.check("nonvanishing sections", rep.nonzero == rep.expected_nonzero);
      const ParamPoly lhs = y(1) * y(5), rhs = y(3) * y(3);
      const bool plus = lhs == rhs, minus = lhs == -rhs;
      rep.check("y1*y5 = +-y3^2", plus || minus);
      if (plus || minus) rep.resolved_signs.push_back(std::string("y1*y5 = ") + (plus ? "+" : "-") + "y3^2");
      rep.check("unit p = p1*p2^4*p3^2*p4^5*p5^3*p6^6*p7^5",
                rep.unit == ParamMonomial{{1, 4, 2, 5, 3, 6, 5, 0, 0}}, monomial_to_string(rep.unit));
      rep.check("forms p*(X^2, XY, Y^2)",
                detail::match_forms(rep, {{1, {2, 0, 0}}, {3, {1, 1, 0}}, {5, {0, 2, 0}}}, false));
      break;
    }
    case ProbeCase::s3: {
      rep.expected_nonzero = {1, 2, 3, 4, 5, 6};
      rep.check("nonvanishing sections", rep.nonzero == rep.expected_nonzero);
      const bool m1 = (y(1) * y(4) - y(3) * y(2)).is_zero();
      const bool m2 = (y(1) * y(6) - y(5) * y(2)).is_zero();
      const bool m3 = (y(3) * y(6) - y(5) * y(4)).is_zero();
      rep.check("2x2 minors of [[y1,y3,y5],[y2,y4,y6]] vanish", m1 && m2 && m3);
      rep.check("unit p = p1*p2^4*p3^2*p4^5*p5^3*p6^6*p7^5*p8^6",
                rep.unit == ParamMonomial{{1, 4, 2, 5, 3, 6, 5, 6, 0}}, monomial_to_string(rep.unit));
      rep.check("forms p*(X^2A, XYA, Y^2A, X^2B, XYB, Y^2B)",
                detail::match_forms(rep,
                                    {{2, {2, 0, 1}}, {4, {1, 1, 1}}, {6, {0, 2, 1}},
                                     {1, {2, 0, 2}}, {3, {1, 1, 2}}, {5, {0, 2, 2}}},
                                    true));
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Descent degrees on the P^1 quotients v = s_alpha v_{r,n}, s_alpha = (a_i - 1, a_i).

/// v = v_{r,n} with its (i+1)-st entry a_i lowered to a_i - 1.
inline ColumnTuple descent_v(int r, int n, int i) {
  if (i < 1 || i >= r) throw ArgumentError("descent index must lie in 1..r-1");
  std::vector<int> v = minimal_richardson_v(r, n).to_vector();
  v[static_cast<std::size_t>(i)] -= 1;
  if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - 1)])
    throw ArgumentError("lowering a_" + std::to_string(i) + " leaves I(r, n)");
  return ColumnTuple(n, v);
}

/// n_i from the count of degree-one standard monomials on X^v_w: n_i + 1 of them.
inline int descent_degree(int r, int n, int i) {
  return static_cast<int>(count_invariants(r, n, 1, minimal_schubert(r, n), descent_v(r, n, i))) - 1;
}

/// Occurrences of a_i in row i+1 of Gamma_{r,n}.
inline int descent_degree_row_count(int r, int n, int i) {
  const Tableau g = gamma_tableau(r, n);
  const int a = minimal_schubert(r, n)[i - 1];
  int c = 0;
  for (int j = 0; j < g.cols(); ++j) c += g.at(i, j) == a ? 1 : 0;
  return c;
}

/// Occurrences of a_i - 1 in row i of Gamma_{r,n}, the count as literally stated.
inline int descent_degree_stated_count(int r, int n, int i) {
  const Tableau g = gamma_tableau(r, n);
  const int a = minimal_schubert(r, n)[i - 1];
  int c = 0;
  for (int j = 0; j < g.cols(); ++j) c += g.at(i - 1, j) == a - 1 ? 1 : 0;
  return c;
}

/// Rank of the span of degree-one invariants restricted to the PDS cell of v
/// inside the canonical word of w_{r,n}.
inline int restricted_section_rank(int r, int n, const ColumnTuple& v) {
  const ColumnTuple w = minimal_schubert(r, n);
  const ReducedWord word = canonical_word(w);
  const CellMatrix g = cell_matrix(find_pds(word, v.to_permutation()));
  std::vector<ParamPoly> secs;
  for (const auto& t : enumerate_invariants(r, n, 1, w, ColumnTuple::identity(r, n))) {
    ParamPoly p = restrict_section(t, g);
    if (!p.is_zero()) secs.push_back(std::move(p));
  }
  return span_rank(secs);
}

}  // namespace gq
