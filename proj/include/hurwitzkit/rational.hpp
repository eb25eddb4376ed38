#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace hwk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }

/// Parses "p/q", integer, or plain decimal literals into an exact rational.
/// Decimal strings are converted exactly (no rounding). Scientific notation
/// is rejected. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

/// Renders as "num" or "num/den" (den > 0, lowest terms).
std::string to_string(const Rational& x);

/// Nearest-double conversion, for the floating oracle and report output.
double to_double(const Rational& x);

}  // namespace hwk
