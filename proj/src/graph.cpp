#include "minorlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlab {

VertexSet::VertexSet(std::vector<std::uint32_t> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(std::uint32_t n) {
    std::vector<std::uint32_t> v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
    VertexSet s;
    s.members_ = std::move(v);
    return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    std::vector<std::uint32_t> v;
    while (mask) {
        v.push_back(static_cast<std::uint32_t>(__builtin_ctzll(mask)));
        mask &= mask - 1;
    }
    VertexSet s;
    s.members_ = std::move(v);
    return s;
}

bool VertexSet::contains(std::uint32_t v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint32_t VertexSet::min() const {
    if (members_.empty()) throw std::logic_error("min() of empty VertexSet");
    return members_.front();
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet out;
    out.members_.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_minus(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_intersect(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

std::uint64_t VertexSet::to_mask() const {
    std::uint64_t mask = 0;
    for (std::uint32_t v : members_) {
        if (v >= 64) throw std::overflow_error("VertexSet::to_mask: member >= 64");
        mask |= std::uint64_t(1) << v;
    }
    return mask;
}

Graph::Graph(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("parallel edge rejected");
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::uint32_t Graph::max_degree() const {
    std::uint32_t d = 0;
    for (const auto& row : adj_) d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(row.size()));
    return d;
}

std::uint32_t Graph::min_degree_vertex() const {
    if (adj_.empty()) throw std::invalid_argument("empty graph");
    std::uint32_t best = 0;
    for (std::uint32_t v = 1; v < order(); ++v)
        if (adj_[v].size() < adj_[best].size()) best = v;
    return best;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < order(); ++u)
        for (std::uint32_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out; // already lex sorted by construction
}

Rational Graph::average_degree() const {
    if (adj_.empty()) throw std::invalid_argument("empty graph");
    return Rational(BigInt(edge_count_), BigInt(order()));
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    std::vector<char> in_s(order(), 0), seen(order(), 0);
    for (std::uint32_t v : s) {
        check_vertex(v);
        in_s[v] = 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v : s)
        for (std::uint32_t w : adj_[v])
            if (!in_s[w] && !seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    return VertexSet(std::move(out));
}

VertexSet Graph::ball(const VertexSet& u, std::uint32_t radius) const {
    std::vector<char> in(order(), 0);
    std::vector<std::uint32_t> frontier;
    for (std::uint32_t v : u) {
        check_vertex(v);
        in[v] = 1;
        frontier.push_back(v);
    }
    for (std::uint32_t r = 0; r < radius && !frontier.empty(); ++r) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier)
            for (std::uint32_t w : adj_[v])
                if (!in[w]) {
                    in[w] = 1;
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < order(); ++v)
        if (in[v]) out.push_back(v);
    return VertexSet(std::move(out));
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<char> seen(order(), 0);
    std::vector<VertexSet> comps;
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s = 0; s < order(); ++s) {
        if (seen[s]) continue;
        std::vector<std::uint32_t> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint32_t w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        comps.emplace_back(VertexSet(std::move(comp)));
    }
    return comps; // ordered by smallest contained vertex
}

Graph::Induced Graph::induced_subgraph(const VertexSet& u) const {
    if (u.empty()) throw std::invalid_argument("induced subgraph of empty set");
    std::vector<std::uint32_t> new_id(order(), UINT32_MAX);
    const auto& ids = u.members();
    for (std::uint32_t i = 0; i < ids.size(); ++i) {
        check_vertex(ids[i]);
        new_id[ids[i]] = i;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t old_u : ids)
        for (std::uint32_t old_v : adj_[old_u])
            if (old_u < old_v && new_id[old_v] != UINT32_MAX)
                es.emplace_back(new_id[old_u], new_id[old_v]);
    return {Graph(static_cast<std::uint32_t>(ids.size()), es), ids};
}

Graph::Induced Graph::densest_component() const {
    if (adj_.empty()) throw std::invalid_argument("empty graph");
    auto comps = connected_components();
    const VertexSet* best = nullptr;
    Rational best_density(-1);
    for (const auto& c : comps) {
        auto ind = induced_subgraph(c);
        Rational d = ind.graph.average_degree();
        if (best == nullptr || d > best_density) {
            best = &c;
            best_density = d;
        }
        // components come ordered by min vertex, so the first maximum wins ties
    }
    return induced_subgraph(*best);
}

std::vector<std::uint32_t> Graph::bit_adjacency() const {
    if (order() > 32) throw std::invalid_argument("bit_adjacency: order exceeds 32");
    std::vector<std::uint32_t> rows(order(), 0);
    for (std::uint32_t v = 0; v < order(); ++v)
        for (std::uint32_t w : adj_[v]) rows[v] |= std::uint32_t(1) << w;
    return rows;
}

void Graph::check_vertex(std::uint32_t v) const {
    if (v >= order()) throw std::out_of_range("vertex index out of range");
}

} // namespace minorlab
