#pragma once

#include "minorlab/rational.hpp"

#include <cstdint>

namespace minorlab {

/// ⌊log2 m⌋ for m >= 1.
int floor_log2_u64(std::uint64_t m);

/// ⌊log2 log2 m⌋ for m >= 2, i.e. the largest j with m >= 2^(2^j).
int floor_log2_log2(std::uint64_t m);

/// Dyadic interval index: the smallest k >= 0 with m <= 2^(2^k), for m >= 2.
/// Orders m are binned into half-open intervals (2^(2^(k-1)), 2^(2^k)].
int dyadic_interval_index(std::uint64_t m);

/// Certified enclosure of log2(x). `lower` and `upper` are dyadic rationals
/// with lower <= log2(x) <= upper and upper - lower <= 2^-frac_bits unless
/// the mantissa interval straddles a bit decision first (the enclosure is
/// then wider but still correct). Exact (lower == upper) whenever x is a
/// power of two.
struct Log2Bounds {
    Rational lower;
    Rational upper;
    bool exact = false;
};

Log2Bounds log2_bounds(const Rational& x, unsigned frac_bits = 32);

/// Smallest s with s^r >= m (r >= 1, m >= 1).
std::uint64_t ceil_nth_root(std::uint64_t m, unsigned r);
/// Largest s with s^r <= m.
std::uint64_t floor_nth_root(std::uint64_t m, unsigned r);

/// 2^e as an exact rational (e may be negative).
Rational pow2_rational(int e);

} // namespace minorlab
