#include "minorlab/bitkernels.hpp"

namespace minorlab {

namespace {

using ScanFn = void (*)(const SubsetScanTable&, std::uint32_t, std::uint32_t,
                        std::vector<std::uint32_t>&);

struct Backend {
    ScanFn fn;
    const char* name;
};

Backend pick_backend() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return {&scan_subsets_avx2, "avx2"};
#endif
    return {&scan_subsets_scalar, "scalar"};
}

const Backend& backend() {
    static const Backend b = pick_backend();
    return b;
}

} // namespace

void scan_subsets(const SubsetScanTable& t, std::uint32_t begin,
                  std::uint32_t end, std::vector<std::uint32_t>& out) {
    backend().fn(t, begin, end, out);
}

std::string subset_scan_backend() { return backend().name; }

} // namespace minorlab
