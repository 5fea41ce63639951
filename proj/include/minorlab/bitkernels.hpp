#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minorlab {

/// Inputs for a subset-expansion scan over an n-vertex graph, n <= 24.
/// Subsets are uint32 bitmasks. For a subset S of cardinality k,
/// limit[k] is the largest neighborhood size |N(S)| that still violates the
/// expansion requirement at the scale bound to k (so S is reported iff
/// |N(S)| <= limit[k]); limit[k] < 0 means cardinality k is out of scope.
struct SubsetScanTable {
    std::vector<std::uint32_t> adjacency; // bitmask row per vertex
    std::int8_t limit[33];
};

/// Appends every violating subset mask in [begin, end) to `out`, in
/// ascending mask order. Reference kernel.
void scan_subsets_scalar(const SubsetScanTable& t, std::uint32_t begin,
                         std::uint32_t end, std::vector<std::uint32_t>& out);

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 variant, 8 subset lanes per step. Bit-identical output to the
/// scalar kernel. Only callable when the CPU supports AVX2.
void scan_subsets_avx2(const SubsetScanTable& t, std::uint32_t begin,
                       std::uint32_t end, std::vector<std::uint32_t>& out);
bool avx2_available();
#endif

/// Dispatching entry point: picks the widest kernel the CPU supports at
/// first use, scalar otherwise.
void scan_subsets(const SubsetScanTable& t, std::uint32_t begin,
                  std::uint32_t end, std::vector<std::uint32_t>& out);

/// Name of the kernel the dispatcher selected ("avx2" or "scalar").
std::string subset_scan_backend();

} // namespace minorlab
