#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace wmscss {

// All guarantee-bearing arithmetic in this project is exact. Rationals are
// kept in lowest terms with a positive denominator by the backing type.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers ("3", "-4") and decimal literals ("0.5",
// "1.25"), all parsed exactly. Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
// parse_rational(to_string(r)) == r for every r.
std::string to_string(const Rational& r);

// Decimal approximation with `digits` places, rounded half away from zero.
// Display only; never feeds back into computations.
std::string to_decimal(const Rational& r, int digits = 6);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace wmscss
