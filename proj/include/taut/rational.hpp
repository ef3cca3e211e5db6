#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace taut {

using Rational = mpq_class;

/// Parses a decimal literal ("-3", "0.25", "1e-3", "7/3") exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text form: a terminating decimal without trailing zeros when one
/// exists, otherwise "num/den".
std::string format_rational(const Rational& value);

/// num / den in canonical form (two-argument mpq construction does not
/// reduce, and equality tests assume reduced values).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

/// Closest rational to a finite double (exact binary value).
Rational from_double(double value);

}  // namespace taut
