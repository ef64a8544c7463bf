#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace virasoro {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

/// Builds a rational from any integer pair, normalizing the sign.
Rational make_rational(BigInt numerator, BigInt denominator);

/// Canonical "p/q" rendering; the denominator is always present ("3/1").
std::string rational_to_string(const Rational& value);

/// Short rendering for display: "3", "-1/2".
std::string rational_to_display(const Rational& value);

/// Accepts "p" or "p/q".
Rational rational_from_string(const std::string& text);

/// Generalized binomial coefficient m(m-1)...(m-j+1)/j! for any integer m.
Rational gen_binomial(int m, int j);

}  // namespace virasoro
