#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nwr {

using Rational = mpq_class;

/// Parses "num/den" or a plain integer. Throws InputError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Always renders as "num/den" in lowest terms, e.g. "1/1", "0/1", "3/4".
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Exact integer power for small non-negative exponents.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace nwr
