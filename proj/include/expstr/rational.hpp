#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace expstr {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal literal ("1.5", ".25", "-3.0")
/// into an exact rational. Decimals are converted digit by digit, never
/// through binary floating point.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Terminating decimal expansion when the denominator has no prime factor
/// other than 2 and 5; nullopt otherwise.
std::optional<std::string> to_exact_decimal(const Rational& value);

/// Rounded decimal for display.
std::string to_approx_decimal(const Rational& value, int significant_digits = 12);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);

}  // namespace expstr
