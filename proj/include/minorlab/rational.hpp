#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace minorlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

/// Parses "p" or "p/q" (q > 0 after normalization). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" form, always with an explicit positive denominator.
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

/// ⌈r⌉ and ⌊r⌋ as integers.
BigInt rational_ceil(const Rational& r);
BigInt rational_floor(const Rational& r);

/// Checked narrowing for threshold arithmetic.
std::uint64_t to_u64(const BigInt& v);

} // namespace minorlab
