#pragma once

#include "minorlab/graph.hpp"
#include "minorlab/minor_model.hpp"

#include <optional>
#include <string>

namespace minorlab {

enum class ModelDefect {
    None,
    BadT,
    IndexOutOfRange,
    EmptyBranchSet,
    BranchSetsOverlap,
    BranchSetDisconnected,
    MissingPath,
    EmptyPath,
    RepeatedVertexInPath,
    NonEdgeInPath,
    EndpointOutsideBranchSet,
    PathTouchesForeignBranchSet,
    PathsShareVertex,
};

std::string defect_name(ModelDefect d);

struct ModelVerdict {
    bool ok = false;
    ModelDefect defect = ModelDefect::None;
    std::string detail;
};

/// Full independent check of a minor model against a graph: branch sets
/// disjoint, nonempty and connected; every path a real path with endpoints
/// in its two sets; no path vertex inside a foreign branch set; two paths
/// may only meet at a vertex that is an endpoint of both and lies in a
/// branch set their index pairs share.
ModelVerdict verify_minor_model_verdict(const Graph& g, const MinorModel& m);
bool verify_minor_model(const Graph& g, const MinorModel& m);

/// Exhaustive K_t-minor search (complete for |V| <= brute_cap): searches
/// the contraction form (disjoint connected pairwise-adjacent branch sets)
/// and converts to the branch-sets-plus-paths certificate with single-edge
/// paths. Returns the lexicographically least witness, or nullopt iff no
/// K_t-minor exists.
std::optional<MinorModel> brute_force_minor(const Graph& g, std::uint32_t t,
                                            std::uint64_t brute_cap = 12);

/// Largest t with a K_t-minor; requires |V| <= brute_cap.
std::uint32_t hadwiger_number(const Graph& g, std::uint64_t brute_cap = 12);

} // namespace minorlab
