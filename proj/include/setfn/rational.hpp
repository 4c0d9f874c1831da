#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace setfn {

/// Exact rational arithmetic for all set-function values. Violation signs
/// must be decided exactly, so no floating point is involved anywhere a
/// certificate is produced or verified. Backed by Boost.Multiprecision;
/// values are always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Builds p/q from machine integers. q must be nonzero.
Rational make_rational(long long numerator, long long denominator = 1);

/// Parses "p" or "p/q" with an optional leading minus on p. No whitespace,
/// no '+', q must be a positive integer. Throws Error otherwise.
Rational parse_rational(std::string_view text);

/// Renders in lowest terms: "p/q", or just "p" when the denominator is 1.
/// parse_rational(render_rational(q)) == q for every value.
std::string render_rational(const Rational& value);

double to_double(const Rational& value);

} // namespace setfn
