#include "minorlab/dyadic.hpp"

#include <stdexcept>

namespace minorlab {

int floor_log2_u64(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("floor_log2_u64: m must be >= 1");
    return 63 - __builtin_clzll(m);
}

int floor_log2_log2(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("floor_log2_log2: m must be >= 2");
    // largest j with 2^(2^j) <= m; j <= 5 for any uint64
    int j = 0;
    for (int cand = 1; cand <= 5; ++cand) {
        if (m >= (std::uint64_t(1) << (1u << cand))) j = cand; else break;
    }
    return j;
}

int dyadic_interval_index(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("dyadic_interval_index: m must be >= 2");
    for (int k = 0; k <= 5; ++k) {
        if (m <= (std::uint64_t(1) << (1u << k))) return k;
    }
    return 6; // every uint64 order is < 2^(2^6)
}

namespace {

// ⌊log2 x⌋ for a positive rational.
int floor_log2_rational(const Rational& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    if (num <= 0) throw std::invalid_argument("log2 of non-positive value");
    long j = static_cast<long>(msb(num)) - static_cast<long>(msb(den));
    // msb difference is within 1 of the truth; fix up by exact comparison.
    while ((j >= 0 ? num < (den << j) : (num << (-j)) < den)) --j;
    while ((j + 1 >= 0 ? num >= (den << (j + 1)) : (num << (-(j + 1))) >= den)) ++j;
    return static_cast<int>(j);
}

} // namespace

Log2Bounds log2_bounds(const Rational& x, unsigned frac_bits) {
    const int j = floor_log2_rational(x);
    // f = x / 2^j in [1, 2)
    BigInt fnum = numerator(x);
    BigInt fden = denominator(x);
    if (j >= 0) fden <<= j; else fnum <<= -j;
    if (fnum == fden) return {Rational(j), Rational(j), true};

    constexpr unsigned B = 128; // guard bits for the mantissa interval
    const BigInt one = BigInt(1) << B;
    const BigInt two = BigInt(1) << (B + 1);
    BigInt lo = (fnum << B) / fden;
    BigInt hi = lo + (lo * fden == (fnum << B) ? 0 : 1);

    BigInt acc = 0;
    unsigned emitted = 0;
    for (unsigned i = 1; i <= frac_bits; ++i) {
        lo = (lo * lo) >> B;
        hi = ((hi * hi) + one - 1) >> B;
        const bool bit_lo = lo >= two;
        const bool bit_hi = hi >= two;
        if (bit_lo != bit_hi) break; // true bit undecidable at this precision
        acc <<= 1;
        if (bit_lo) {
            acc += 1;
            lo >>= 1;
            hi = (hi + 1) >> 1;
        }
        ++emitted;
        if (lo == one && hi == one) {
            Rational v = Rational(j) + Rational(acc, BigInt(1) << emitted);
            return {v, v, true};
        }
    }
    Rational lower = Rational(j) + Rational(acc, BigInt(1) << emitted);
    Rational upper = lower + Rational(BigInt(1), BigInt(1) << emitted);
    return {lower, upper, false};
}

namespace {

bool pow_at_least(std::uint64_t s, unsigned r, std::uint64_t m) {
    // s^r >= m without overflow
    BigInt p = 1;
    for (unsigned i = 0; i < r; ++i) {
        p *= s;
        if (p >= m) return true;
    }
    return p >= m;
}

} // namespace

std::uint64_t ceil_nth_root(std::uint64_t m, unsigned r) {
    if (r == 0) throw std::invalid_argument("ceil_nth_root: r must be >= 1");
    if (m <= 1) return m;
    std::uint64_t lo = 1, hi = m;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow_at_least(mid, r, m)) hi = mid; else lo = mid + 1;
    }
    return lo;
}

std::uint64_t floor_nth_root(std::uint64_t m, unsigned r) {
    if (r == 0) throw std::invalid_argument("floor_nth_root: r must be >= 1");
    if (m == 0) return 0;
    const std::uint64_t c = ceil_nth_root(m, r); // smallest s with s^r >= m
    BigInt p = 1;
    for (unsigned i = 0; i < r; ++i) p *= c;
    return p == m ? c : c - 1;
}

Rational pow2_rational(int e) {
    if (e >= 0) return Rational(BigInt(1) << e);
    return Rational(BigInt(1), BigInt(1) << (-e));
}

} // namespace minorlab
