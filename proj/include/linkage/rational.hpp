#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linkage {

/// Thrown for malformed or unsupported input (bad type/rank, bad strings,
/// dimension mismatches, mixed posets).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation is asked to work at the critical level k = -h^vee.
class CriticalLevelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a bounded search could not certify its answer.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q" or "-p/q" (whitespace tolerated at the ends).
Rational parse_rational(std::string_view text);

/// Canonical reduced form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// p/q in lowest terms; throws ConfigurationError when q = 0.
Rational ratio(std::int64_t p, std::int64_t q);

/// Signed 64-bit value of an integral rational; throws if out of range.
std::int64_t to_int64(const Rational& value);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace linkage
