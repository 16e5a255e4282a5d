#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gq/errors.hpp"
#include "gq/rational.hpp"

namespace gq {

/// Finitely supported map Monomial -> Rational with no stored zeros.
/// Multiplication needs an ADL-visible `monomial_product(a, b)`; printing
/// needs `monomial_to_string(m)`.
template <class Monomial, class Compare = std::less<Monomial>>
class SparsePoly {
 public:
  using monomial_type = Monomial;
  using Terms = std::map<Monomial, Rational, Compare>;

  SparsePoly() = default;
  explicit SparsePoly(const Monomial& m, const Rational& c = 1) { add_term(m, c); }

  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest monomial under Compare.
  const std::pair<const Monomial, Rational>& leading() const {
    if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    else
      for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Terms from largest to smallest, e.g. "Y3^2 - Y3*Y7".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      const std::string mono = monomial_to_string(it->first);
      if (mono.empty()) s += gq::to_string(c);
      else if (c == 1) s += mono;
      else s += gq::to_string(c) + "*" + mono;
      first = false;
    }
    return s;
  }

 private:
  Terms terms_;
};

/// Exponent vector over generators Y_1..Y_k.
struct Exponents {
  std::vector<int> e;

  Exponents() = default;
  explicit Exponents(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e)
      if (x < 0) throw ArgumentError("negative exponent");
  }
  static Exponents variable(int k, int i) {
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    v.at(static_cast<std::size_t>(i - 1)) = 1;
    return Exponents(std::move(v));
  }

  int generators() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool divides(const Exponents& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  bool coprime(const Exponents& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
  }

  friend Exponents monomial_product(const Exponents& a, const Exponents& b) {
    if (a.e.size() != b.e.size()) throw ArgumentError("generator count mismatch");
    Exponents out = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) out.e[i] += b.e[i];
    return out;
  }
  friend Exponents quotient(const Exponents& a, const Exponents& b) {
    Exponents out = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) out.e[i] -= b.e[i];
    return out;
  }
  friend Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents out = a;
    for (std::size_t i = 0; i < b.e.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
    return out;
  }
  friend std::string monomial_to_string(const Exponents& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "Y" + std::to_string(i + 1);
      if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order with Y_1 > Y_2 > ... > Y_k.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
};

using YPoly = SparsePoly<Exponents, GradedLex>;

}  // namespace gq
