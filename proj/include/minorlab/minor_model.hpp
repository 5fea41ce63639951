#pragma once

#include "minorlab/graph.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace minorlab {

/// Certificate of a K_t-minor: t disjoint connected branch sets plus one
/// connecting path per pair, paths internally vertex disjoint. Paths are
/// vertex sequences; a single edge is a path of length 1.
struct MinorModel {
    std::uint32_t t = 0;
    std::vector<VertexSet> branch_sets; // size t
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> paths;

    /// Total number of distinct vertices used by sets and paths.
    std::uint64_t order() const;

    /// Relabels all vertices through new_id = ids[old_id]^-1 style mapping:
    /// ids[v] is the ambient id of local vertex v.
    MinorModel mapped_through(const std::vector<std::uint32_t>& ids) const;
};

nlohmann::json minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const nlohmann::json& j);

} // namespace minorlab
