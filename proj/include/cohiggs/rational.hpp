#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace cohiggs {

// Arbitrary-precision substrate. cpp_rational keeps gcd(num, den) = 1 and
// den > 0 as a class invariant, which is exactly the contract we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integer square root: largest r with r*r <= n, or nullopt if n < 0
/// or n is not a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Exact nonnegative rational square root, if one exists.
std::optional<Rational> rational_sqrt_exact(const Rational& q);

/// "n" or "n/d" with d > 0.
std::string rational_to_string(const Rational& q);

/// Parses "n" or "n/d" (optional sign, arbitrary precision). Returns nullopt
/// on malformed input or zero denominator.
std::optional<Rational> parse_rational(std::string_view s);

}  // namespace cohiggs
