#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace schubert {

/// Exact arbitrary-precision integer and rational scalars used everywhere.
/// Rational is always stored in lowest terms with positive denominator.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the integer square root, by Newton iteration on Int.
/// Throws std::invalid_argument for negative input.
Int isqrt(const Int& n);

/// Parses "p/q" or "p" (optional leading sign, q > 0 after normalization).
/// Throws std::invalid_argument with the offending text on malformed input.
Rational parse_rational(std::string_view s);

/// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Fixed-point decimal rendering with `digits` fractional digits,
/// rounded half away from zero. Display-only; exactness lives in p/q.
std::string decimal_string(const Rational& r, int digits);

} // namespace schubert
