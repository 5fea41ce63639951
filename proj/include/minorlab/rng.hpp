#pragma once

#include <cstdint>
#include <random>

namespace minorlab {

/// splitmix64 finalizer; used for sub-seed derivation so that parallel and
/// serial trial orders agree.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0, std::uint64_t c = 0) {
    return seed ^ mix64(a ^ mix64(b ^ mix64(c)));
}

/// Deterministic, platform-independent RNG: the raw mt19937_64 stream
/// (algorithm fixed by the standard) plus rejection sampling for bounded
/// draws. std::uniform_int_distribution is deliberately avoided because its
/// output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = engine_(); } while (x >= limit);
        return x % n;
    }

    /// Bernoulli with exact probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) {
        return below(den) < num;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace minorlab
