#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pbl {

// All quantities in the pipeline (LP data, probabilities, epsilon, bound
// values) are exact rationals. GMP's mpq_class keeps values canonical:
// lowest terms, positive denominator, arbitrary precision.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q" or "p" (optional leading '-'). Rejects q == 0 and junk.
Rational parse_rational(const std::string& text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// 2^k as an exact rational; k may be negative.
Rational pow2(long k);

// Largest k with 2^k <= value. Requires value > 0.
long floor_log2(const Rational& value);

// Smallest k with value <= 2^k. Requires value > 0.
long ceil_log2(const Rational& value);

// Decimal approximation with the given significant digits, for display only.
std::string decimal_approx(const Rational& value, int significant_digits = 6);

}  // namespace pbl
