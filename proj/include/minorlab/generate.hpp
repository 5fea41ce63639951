#pragma once

#include "minorlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace minorlab {

enum class GenModel { Gnp, HighGirth, DisjointCliques, RandomRegular };

GenModel gen_model_from_name(const std::string& name);
std::string gen_model_name(GenModel m);

/// Seed-deterministic graph generators.
///  Gnp:             param = c, each pair kept with exact probability c/n.
///  HighGirth:       param = target girth g; sample G(n, param2/n) and
///                   repeatedly delete the lexicographically least edge of a
///                   shortest cycle until girth >= g (param2 defaults to 3).
///  DisjointCliques: param = clique order k (must divide n); density (k-1)/2.
///  RandomRegular:   param = degree d, pairing model with rejection.
struct GenSpec {
    GenModel model = GenModel::Gnp;
    std::uint64_t n = 0;
    std::uint64_t param = 0;
    std::uint64_t param2 = 3; // HighGirth base-graph density numerator c
    std::uint64_t seed = 0;
};

Graph gen(const GenSpec& spec);

/// Length of the shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

} // namespace minorlab
