#pragma once

#include <stdexcept>
#include <string>

namespace gq {

/// Malformed or mismatched arguments (wrong shapes, unequal (r, n), v not below w).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs outside the supported setting, e.g. gcd(r, n) != 1.
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewrite system whose rules are not oriented by its monomial order.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A combinatorial lemma failed on a concrete input; the message carries the witness.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested object does not exist (e.g. no PDS because v is not below w).
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gq
