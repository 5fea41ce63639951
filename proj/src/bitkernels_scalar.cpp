#include "minorlab/bitkernels.hpp"

namespace minorlab {

void scan_subsets_scalar(const SubsetScanTable& t, std::uint32_t begin,
                         std::uint32_t end, std::vector<std::uint32_t>& out) {
    const std::uint32_t* adj = t.adjacency.data();
    for (std::uint32_t s = begin; s < end; ++s) {
        const int k = __builtin_popcount(s);
        const std::int8_t lim = t.limit[k];
        if (lim < 0) continue;
        std::uint32_t nb = 0;
        std::uint32_t bits = s;
        while (bits) {
            nb |= adj[__builtin_ctz(bits)];
            bits &= bits - 1;
        }
        const int nbc = __builtin_popcount(nb & ~s);
        if (nbc <= lim) out.push_back(s);
    }
}

} // namespace minorlab
