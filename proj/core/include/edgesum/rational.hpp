#pragma once

// Exact arithmetic primitives shared by the whole library: GMP-backed
// arbitrary-precision integers and rationals, fraction (de)serialization,
// ceilings/floors, and exact binomial coefficients.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace edgesum {

/// Arbitrary-precision integer (GMP mpz).
using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational (GMP mpq, always kept canonical by GMP:
/// positive denominator, reduced to lowest terms).
using Rat = boost::multiprecision::mpq_rational;

/// Renders a rational as "numerator/denominator", e.g. "-3/7", "0/1", "5/1".
/// The denominator is always present so the format is uniform and reports
/// stay trivially machine-parseable.
std::string to_fraction_string(const Rat& r);

/// Parses "p", "p/q", with optional leading '-' or '+' on p (and none on q).
/// Throws UsageError on malformed input or q == 0.
Rat parse_fraction(const std::string& text);

/// Exact ceiling / floor of a rational as a BigInt.
BigInt rat_ceil(const Rat& r);
BigInt rat_floor(const Rat& r);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
/// Throws UsageError when n < 0.
BigInt binomial(long long n, long long k);

/// Exact factorial n!; throws UsageError when n < 0.
BigInt factorial(long long n);

/// 10^exponent as an exact BigInt; exponent must be >= 0.
BigInt pow10(int exponent);

/// Converts to int64 and throws UsageError (with the offending value in the
/// message) when the value does not fit.
long long to_i64_checked(const BigInt& value, const char* context);

}  // namespace edgesum
