#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tropgeom {

// All arithmetic in the library is exact. Geometric predicates (ties in a
// maximum) are meaningless under rounding, so there is no floating point
// anywhere on a computation path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "p/q", "-3", "2.75" (exact decimal) into a rational.
/// Throws TropError(ParseError) on anything else.
Rat parse_rational(std::string_view text);

/// Canonical form: "n" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& value);

/// Fixed-point decimal with `places` digits, rounding half to even.
/// Used only by the SVG layer; exact values never pass through here twice.
std::string format_decimal_fixed(const Rat& value, unsigned places);

}  // namespace tropgeom
