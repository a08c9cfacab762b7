#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace albanese {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Malformed or out-of-domain arguments (CLI exit code 1).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded (CLI exit code 3).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; indicates a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a cooperative stop request is observed.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled") {}
};

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace albanese
