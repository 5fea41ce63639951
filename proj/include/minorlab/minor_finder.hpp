#pragma once

#include "minorlab/expansion.hpp"
#include "minorlab/extraction.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minor_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minorlab {

/// Ball B_k(v) whose layers grow by a factor >= (1+gamma) at every radius
/// 1 <= i <= k-1, witnessed by the recorded layer sizes.
struct ExpandingBall {
    std::uint32_t center = 0;
    std::uint32_t radius = 0;
    Rational gamma;
    std::vector<std::uint64_t> layer_sizes; // |B_0| .. |B_radius|
    VertexSet member_set;
};

/// Recomputes the layers of B_radius(center) inside G[member_set] and checks
/// they reproduce layer_sizes and satisfy the growth condition.
bool expanding_ball_is_valid(const Graph& g, const ExpandingBall& b);

struct HubsOrBalls {
    enum class Kind { Hubs, Balls };
    Kind kind = Kind::Hubs;
    std::vector<std::uint32_t> hubs;  // t vertices, degree >= threshold
    std::vector<ExpandingBall> balls; // t disjoint expanding balls
};

/// Search thresholds. paper_defaults uses the source formulas (log^4 m
/// degree threshold, [m^(1/5), m^(1/4)] ball window, [log^4 m, log^8 m]
/// core window); at desk scale those put the degree threshold above m and
/// make the windows unreachable, so desk_defaults substitutes thresholds
/// that let both regimes actually fire. Reports record which was used.
struct MinorSearchParams {
    ExpansionProfile profile;
    std::uint32_t t = 0;
    std::uint64_t degree_threshold = 0;
    std::uint64_t ball_size_lo = 0;
    std::uint64_t ball_size_hi = 0;
    std::uint64_t core_size_lo = 0;
    std::uint64_t core_size_hi = 0;
    std::uint64_t path_budget = 0;
    std::uint64_t stuck_cap = 0;
    Rational gamma;
    std::string flavor; // "paper" or "desk"

    static MinorSearchParams paper_defaults(const ExpansionProfile& p, std::uint32_t t,
                                            std::uint64_t m);
    static MinorSearchParams desk_defaults(const ExpansionProfile& p, std::uint32_t t,
                                           std::uint64_t m);
};

struct StuckBall {
    std::uint32_t start = 0;
    VertexSet removed;
    std::string why; // "stalled" | "overshoot"
};

struct MinorSearchFailure {
    std::string reason;
    std::pair<std::uint32_t, std::uint32_t> pair{0, 0};
    std::vector<StuckBall> stuck;
    std::uint64_t stuck_total = 0;
};

struct HubsOrBallsResult {
    std::optional<HubsOrBalls> found;
    MinorSearchFailure failure;
};

struct AssemblyResult {
    std::optional<MinorModel> model;
    MinorSearchFailure failure;
};

/// Shortest U-V path in G minus `forbidden` (BFS from the set U), plus the
/// ball-growth bookkeeping: whether both endpoint sets kept the claimed
/// boundary-growth condition up to half coverage, in which case the path
/// length is asserted against the claimed bound.
struct PathSearch {
    std::optional<std::vector<std::uint32_t>> path;
    bool growth_precondition_held = false;
    double length_bound = 0.0;
};

PathSearch grow_ball_path(const Graph& g, const VertexSet& u, const VertexSet& v,
                          const VertexSet& forbidden, const ExpansionProfile& profile);

/// Hubs-or-balls dichotomy: t vertices of degree >= threshold, or t
/// disjoint gamma-expanding balls grown away from the high-degree set,
/// discarding stalled or overshooting balls until the stuck budget runs
/// out. Failure carries the stuck state.
HubsOrBallsResult find_hubs_or_balls(const Graph& g, const MinorSearchParams& params);

/// Topological assembly: pairwise paths between hub vertices, previous
/// internals forbidden.
AssemblyResult assemble_minor_hubs(const Graph& g, const std::vector<std::uint32_t>& hubs,
                                   const MinorSearchParams& params);

/// Ball assembly: trims each ball to a core, packs pairwise core-to-core
/// paths avoiding the other cores, and wires each core's path entries to
/// its center by star paths forming the branch sets.
AssemblyResult assemble_minor_balls(const Graph& g, const std::vector<ExpandingBall>& balls,
                                    const MinorSearchParams& params);

struct FindMinorConfig {
    PipelineConfig pipeline;
    std::uint64_t brute_cap = 12;
    bool desk_params = true;
    std::optional<MinorSearchParams> params_override;
};

struct FindMinorReport {
    std::optional<MinorModel> model; // original coordinates, verified
    MinorSearchFailure failure;
    std::string regime; // "brute" | "hubs" | "balls"
    std::string params_flavor;
    Rational delta;
    bool out_of_regime_delta = false;
    Rational input_density;
    std::uint64_t expander_order = 0;
    Rational expander_density;
    ExtractionOutcome extraction_outcome = ExtractionOutcome::SmallGraphStop;
    std::uint64_t extraction_steps = 0;
    std::uint64_t order = 0;
    double order_bound_ratio = 0.0; // order / ((c t^2/eps) log2 n loglog2 n)
};

/// Theorem-1 pipeline: check d(G) >= c(t) + eps, extract a
/// (delta, n)-expander with delta = eps / (8 c(t)), then find the minor by
/// brute force (small expanders) or hubs/balls search, mapping the model
/// back to the original graph and verifying it there.
FindMinorReport find_small_minor(const Graph& g, std::uint32_t t, const Rational& epsilon,
                                 const Rational& c_of_t, const FindMinorConfig& cfg = {});

} // namespace minorlab
