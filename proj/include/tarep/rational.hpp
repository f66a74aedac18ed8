#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace tarep {

/// Exact rational number. All bounds, delays and variation values use it.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" and "p/q". Returns nullopt on malformed text or q = 0.
std::optional<Rational> parse_rational(std::string_view text);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);
Rational abs(const Rational& value);

bool is_integer(const Rational& value);

/// Least common multiple of two positive integers held as rationals.
Rational lcm(const Rational& a, const Rational& b);

}  // namespace tarep
