#pragma once

#include "minorlab/generate.hpp"
#include "minorlab/minor_finder.hpp"

#include <iosfwd>
#include <vector>

namespace minorlab {

/// One experiment sweep: for each n and trial, generate a graph (optionally
/// re-sampling until a density floor holds), run the minor pipeline, and
/// emit one CSV row; per-n aggregate rows summarize success rate and the
/// order/(log2 n) and order/(log2 n loglog2 n) ratios.
struct SweepConfig {
    GenModel model = GenModel::Gnp;
    std::vector<std::uint64_t> ns;
    std::uint64_t gen_param = 8;
    std::uint64_t gen_param2 = 3;
    bool girth_from_n = false; // HighGirth: param = ceil(log2(n)/2) per n
    std::uint32_t t = 4;
    Rational epsilon = 1;
    Rational c_of_t = 2;
    std::uint64_t trials = 8;
    std::uint64_t seed = 0;
    std::optional<Rational> min_density; // conditioning floor, resample until met
    std::uint64_t max_gen_attempts = 64;
    bool timings = false; // elapsed-ms column is opt-in: it breaks byte determinism
    FindMinorConfig find;
};

struct SweepAggregate {
    std::uint64_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t max_order = 0;
    double max_ratio_log = 0.0;    // order / log2(n)
    double max_ratio_loglog = 0.0; // order / (log2(n) * log2 log2(n))
    std::uint64_t min_model_order_girth_ok = 1; // all models >= generator girth target
};

struct SweepReport {
    std::vector<SweepAggregate> per_n;
};

SweepReport run_sweep(const SweepConfig& cfg, std::ostream& csv);

} // namespace minorlab
