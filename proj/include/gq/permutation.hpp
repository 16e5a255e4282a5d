#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gq/errors.hpp"

namespace gq {

/// Element of S_n in one-line notation, values 1..n. Products compose as
/// functions: (u * v)(k) = u(v(k)), so a word s_{i1} s_{i2} ... evaluates
/// left to right as a composition.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  explicit Permutation(std::vector<int> one_line) : images_(std::move(one_line)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
      if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
        throw ArgumentError("not a permutation in one-line notation");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw ArgumentError("simple reflection index out of range");
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
  }

  static Permutation from_word(int n, std::span<const int> letters) {
    Permutation p(n);
    for (int i : letters) p = p.times_simple(i);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.size() != size()) throw ArgumentError("permutation sizes differ");
    Permutation out(size());
    for (int k = 1; k <= size(); ++k) out.images_[static_cast<std::size_t>(k - 1)] = (*this)(rhs(k));
    return out;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (int k = 1; k <= size(); ++k) out.images_[static_cast<std::size_t>((*this)(k) - 1)] = k;
    return out;
  }

  /// Right multiplication by s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const {
    check_letter(i);
    Permutation out = *this;
    std::swap(out.images_[static_cast<std::size_t>(i - 1)], out.images_[static_cast<std::size_t>(i)]);
    return out;
  }

  /// Left multiplication by s_i: swaps the values i and i+1.
  Permutation simple_times(int i) const {
    check_letter(i);
    Permutation out = *this;
    for (int& x : out.images_) {
      if (x == i) x = i + 1;
      else if (x == i + 1) x = i;
    }
    return out;
  }

  bool has_right_descent(int i) const {
    check_letter(i);
    return (*this)(i) > (*this)(i + 1);
  }

  int length() const {
    int inv = 0;
    for (std::size_t a = 0; a < images_.size(); ++a)
      for (std::size_t b = a + 1; b < images_.size(); ++b)
        if (images_[a] > images_[b]) ++inv;
    return inv;
  }

  /// Some reduced word, obtained by peeling the smallest right descent.
  std::vector<int> reduced_word() const {
    std::vector<int> reversed;
    Permutation cur = *this;
    while (true) {
      int i = 1;
      while (i < size() && !cur.has_right_descent(i)) ++i;
      if (i >= size()) break;
      reversed.push_back(i);
      cur = cur.times_simple(i);
    }
    return {reversed.rbegin(), reversed.rend()};
  }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if ((*this)(k) != k) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(images_[k]);
    }
    return s + "]";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void check_letter(int i) const {
    if (i < 1 || i >= size()) throw ArgumentError("simple reflection index out of range");
  }

  std::vector<int> images_;
};

/// Bruhat order on S_n by the tableau criterion: for every k the sorted
/// prefix u(1..k) is componentwise at most the sorted prefix w(1..k).
inline bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw ArgumentError("permutation sizes differ");
  std::vector<int> pu, pw;
  for (int k = 1; k <= u.size(); ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
    for (std::size_t a = 0; a < pu.size(); ++a)
      if (pu[a] > pw[a]) return false;
  }
  return true;
}

}  // namespace gq
