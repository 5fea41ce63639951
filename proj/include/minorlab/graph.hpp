#pragma once

#include "minorlab/rational.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace minorlab {

/// Set of vertex indices over a fixed ambient graph. Members are kept
/// sorted ascending, which doubles as the deterministic iteration order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<std::uint32_t> members);

    static VertexSet single(std::uint32_t v) { return VertexSet({v}); }
    static VertexSet full(std::uint32_t n);
    static VertexSet from_mask(std::uint64_t mask);

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::uint32_t v) const;
    std::uint32_t min() const;
    const std::vector<std::uint32_t>& members() const { return members_; }

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_minus(const VertexSet& other) const;
    VertexSet set_intersect(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    /// Bitmask encoding; all members must be < 64.
    std::uint64_t to_mask() const;

    bool operator==(const VertexSet&) const = default;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<std::uint32_t> members_;
};

/// Simple undirected graph: no loops, no parallel edges, adjacency kept as
/// sorted neighbor lists. Immutable after construction; safe to share
/// read-only across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::uint32_t n) : adj_(n) {}
    Graph(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    std::uint32_t order() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }
    std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const { return adj_[v]; }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t max_degree() const;
    std::uint32_t min_degree_vertex() const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    /// |E|/|V| as an exact rational. Throws on an empty graph.
    Rational average_degree() const;

    /// N(S): vertices outside S adjacent to S.
    VertexSet neighborhood(const VertexSet& s) const;

    /// B_k(U): all vertices within distance k of U.
    VertexSet ball(const VertexSet& u, std::uint32_t radius) const;

    std::vector<VertexSet> connected_components() const;

    struct Induced;

    /// Induced subgraph on u, densely reindexed. Throws on empty u.
    Induced induced_subgraph(const VertexSet& u) const;

    /// Component maximizing |E|/|V|; ties broken by smallest minimum vertex.
    Induced densest_component() const;

    /// Adjacency rows as bitmasks; requires order() <= 32.
    std::vector<std::uint32_t> bit_adjacency() const;

private:
    void check_vertex(std::uint32_t v) const;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint64_t edge_count_ = 0;
};

struct Graph::Induced {
    Graph graph;
    std::vector<std::uint32_t> original_ids; // new index -> old index, ascending
};

} // namespace minorlab
