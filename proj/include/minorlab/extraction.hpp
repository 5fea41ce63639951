#pragma once

#include "minorlab/expansion.hpp"
#include "minorlab/graph.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minorlab {

enum class StepCase { Case1Removal, Case2Restriction, FallbackRemoval };

/// One iteration of the density-preserving process. The violation witness
/// and the kept vertex set are in the coordinates of the graph the step was
/// applied to; the remap chain is reconstructed by replaying the steps.
struct ExtractionStep {
    std::uint64_t iteration = 0;
    std::uint64_t order_before = 0;
    std::uint64_t order_after = 0;
    Rational density_before;
    Rational density_after;
    ExpansionViolation violation;
    StepCase case_taken = StepCase::Case1Removal;
    std::vector<std::uint32_t> kept; // current coords, ascending
};

enum class ExtractionOutcome {
    ExpanderCertified,          // exact checker found no violation
    HeuristicNoViolationFound,  // heuristic finder gave up; expansion only probed
    SmallGraphStop,             // order fell to the stop threshold; kept whole graph
    ComponentFallback,          // small stop that returned a proper densest component
};

std::string outcome_name(ExtractionOutcome o);

struct PipelineConfig {
    std::uint64_t exact_cap = 20;
    std::uint64_t probe_cap = 2048;
    std::uint64_t stop_order_delta = 256; // process stop for delta profiles
    std::uint64_t stop_order_delta_n = 4; // process stop for (delta, n) profiles
    std::uint64_t rng_seed = 0;

    std::uint64_t stop_order(ProfileKind kind) const {
        return kind == ProfileKind::DeltaExpander ? stop_order_delta : stop_order_delta_n;
    }
};

/// a_d per dyadic order interval (2^(2^(k-1)), 2^(2^k)]: how many Case 2
/// restrictions were taken at each scale while the order sat in interval k.
struct IntervalTally {
    int interval = 0;
    std::map<int, std::uint64_t> case2_by_scale;
};

struct ExtractionTrace {
    std::uint64_t input_order = 0;
    std::uint64_t input_edges = 0;
    Rational input_density;
    ExpansionProfile profile;
    std::uint64_t stop_order = 0;
    std::uint64_t exact_cap = 0;
    std::string finder; // "auto", "exact", "custom"
    std::vector<ExtractionStep> steps;
    ExtractionOutcome outcome = ExtractionOutcome::SmallGraphStop;
    std::vector<std::uint32_t> final_vertices; // original coordinates
    Rational final_density;
    std::vector<IntervalTally> tallies;
    bool had_fallback = false;
    std::uint64_t finder_probes = 0;
};

struct ExtractionResult {
    Graph expander;
    std::vector<std::uint32_t> original_ids;
    ExtractionTrace trace;
};

struct SplitResult {
    StepCase case_taken = StepCase::Case1Removal;
    std::vector<std::uint32_t> kept; // current coords, ascending
    Graph next;
    std::vector<std::uint32_t> next_original_ids; // into the split graph
    Rational density_after;
};

/// The Case 1 / Case 2 dichotomy. Re-verifies the violation ("stale
/// violation" otherwise), prefers removal when its density does not drop,
/// and otherwise restricts to S ∪ N(S) asserting the claim's exact
/// density bound. A violation covering the whole graph degenerates to a
/// single lowest-degree-vertex removal (FallbackRemoval).
SplitResult split_on_violation(const Graph& g, const ExpansionViolation& v);

using ViolationFinder =
    std::function<std::optional<ExpansionViolation>(const Graph&, const ExpansionProfile&)>;

/// Iterates find-violation / split until certified, heuristic exhaustion,
/// or the stop order, then returns the densest component on a small stop.
ExtractionResult extract_expander(const Graph& g, const ExpansionProfile& p,
                                  const PipelineConfig& cfg = {});

/// Same process with a caller-supplied violation finder (used by the
/// adversarial robustness tests; any genuine violation keeps the floor).
ExtractionResult extract_expander_with_finder(const Graph& g, const ExpansionProfile& p,
                                              const PipelineConfig& cfg,
                                              const ViolationFinder& finder,
                                              const std::string& finder_name = "custom");

/// Independent replay of a trace on the original graph: re-verifies every
/// violation, every case decision and density by exact arithmetic, the
/// per-interval tallies (sum a_d 2^d <= 2^k), the final component choice,
/// and the telescoped density floor ((1-delta)c, resp. (1-2delta)c).
/// Returns false on the first mismatch; throws on a structurally malformed
/// trace (bad indices / remap chain).
bool verify_extraction_trace(const Graph& original, const ExtractionTrace& trace);

/// Versioned JSON and compact binary forms of a trace.
nlohmann::json trace_to_json(const ExtractionTrace& trace);
ExtractionTrace trace_from_json(const nlohmann::json& j);
void write_trace_binary(std::ostream& out, const ExtractionTrace& trace);
ExtractionTrace read_trace_binary(std::istream& in);

} // namespace minorlab
