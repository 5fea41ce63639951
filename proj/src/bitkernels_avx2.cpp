#if defined(__x86_64__) || defined(_M_X64)

#include "minorlab/bitkernels.hpp"

#include <immintrin.h>

namespace minorlab {

namespace {

// Per-lane popcount of 32-bit values via the nibble LUT.
inline __m256i popcount_epi32(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
        0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low4 = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low4));
    __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi32(v, 4), low4));
    __m256i bytes = _mm256_add_epi8(lo, hi);
    __m256i pairs = _mm256_maddubs_epi16(bytes, _mm256_set1_epi8(1));
    return _mm256_madd_epi16(pairs, _mm256_set1_epi16(1));
}

// limit[k] lookup for k in [0, 32], sign-extended to int32 lanes.
inline __m256i lookup_limit(__m256i k, __m256i tab_lo, __m256i tab_hi, __m256i tab_32) {
    const __m256i idx = _mm256_or_si256(_mm256_and_si256(k, _mm256_set1_epi32(0x0f)),
                                        _mm256_set1_epi32(static_cast<int>(0x80808000)));
    __m256i lo = _mm256_shuffle_epi8(tab_lo, idx);
    __m256i hi = _mm256_shuffle_epi8(tab_hi, idx);
    __m256i use_hi = _mm256_cmpgt_epi32(k, _mm256_set1_epi32(15));
    __m256i v = _mm256_blendv_epi8(lo, hi, use_hi);
    __m256i is32 = _mm256_cmpeq_epi32(k, _mm256_set1_epi32(32));
    v = _mm256_blendv_epi8(v, tab_32, is32);
    // sign-extend the low byte of each lane
    return _mm256_srai_epi32(_mm256_slli_epi32(v, 24), 24);
}

} // namespace

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

void scan_subsets_avx2(const SubsetScanTable& t, std::uint32_t begin,
                       std::uint32_t end, std::vector<std::uint32_t>& out) {
    const std::uint32_t* adj = t.adjacency.data();
    const int n = static_cast<int>(t.adjacency.size());

    alignas(32) std::int8_t lim_bytes[32];
    for (int i = 0; i < 32; ++i) lim_bytes[i] = t.limit[i];
    const __m256i tab_lo = _mm256_broadcastsi128_si256(
        _mm_load_si128(reinterpret_cast<const __m128i*>(lim_bytes)));
    const __m256i tab_hi = _mm256_broadcastsi128_si256(
        _mm_load_si128(reinterpret_cast<const __m128i*>(lim_bytes + 16)));
    const __m256i tab_32 = _mm256_set1_epi32(static_cast<std::uint8_t>(t.limit[32]));

    std::uint32_t s = begin;
    for (; s + 8 <= end; s += 8) {
        const __m256i sv = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(s)),
                                            _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7));
        __m256i nb = _mm256_setzero_si256();
        __m256i shifted = sv;
        for (int v = 0; v < n; ++v) {
            const __m256i bit = _mm256_and_si256(shifted, _mm256_set1_epi32(1));
            const __m256i sel = _mm256_cmpeq_epi32(bit, _mm256_set1_epi32(1));
            nb = _mm256_or_si256(nb, _mm256_and_si256(sel, _mm256_set1_epi32(static_cast<int>(adj[v]))));
            shifted = _mm256_srli_epi32(shifted, 1);
        }
        const __m256i outside = _mm256_andnot_si256(sv, nb);
        const __m256i nbc = popcount_epi32(outside);
        const __m256i k = popcount_epi32(sv);
        const __m256i lim = lookup_limit(k, tab_lo, tab_hi, tab_32);
        // violation: lim >= 0 and nbc <= lim  <=>  lim >= nbc and lim >= 0
        const __m256i ok = _mm256_andnot_si256(
            _mm256_cmpgt_epi32(nbc, lim),
            _mm256_cmpgt_epi32(lim, _mm256_set1_epi32(-1)));
        int mask = _mm256_movemask_ps(_mm256_castsi256_ps(ok));
        while (mask) {
            const int lane = __builtin_ctz(mask);
            out.push_back(s + static_cast<std::uint32_t>(lane));
            mask &= mask - 1;
        }
    }
    if (s < end) scan_subsets_scalar(t, s, end, out);
}

} // namespace minorlab

#endif
