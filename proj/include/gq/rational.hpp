#pragma once

#include <gmpxx.h>

#include <string>

namespace gq {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace gq
