#include "minorlab/generate.hpp"

#include "minorlab/rng.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace minorlab {

GenModel gen_model_from_name(const std::string& name) {
    if (name == "gnp") return GenModel::Gnp;
    if (name == "high-girth") return GenModel::HighGirth;
    if (name == "cliques") return GenModel::DisjointCliques;
    if (name == "regular") return GenModel::RandomRegular;
    throw std::invalid_argument("unknown generator model: " + name);
}

std::string gen_model_name(GenModel m) {
    switch (m) {
        case GenModel::Gnp: return "gnp";
        case GenModel::HighGirth: return "high-girth";
        case GenModel::DisjointCliques: return "cliques";
        case GenModel::RandomRegular: return "regular";
    }
    return "?";
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> gnp_edges(std::uint64_t n,
                                                               std::uint64_t c,
                                                               std::uint64_t seed) {
    if (c > n) throw std::invalid_argument("gnp: c/n would exceed 1");
    Rng rng(seed);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            if (rng.chance(c, n)) edges.emplace_back(i, j);
    return edges;
}

struct CycleHit {
    std::uint32_t length = 0;
    std::vector<std::uint32_t> vertices; // the cycle, in order
};

// Shortest cycle through the BFS roots scanned in ascending order; the
// depth cutoff from the best length so far keeps this fast once the girth
// grows. Deterministic for sorted adjacency.
std::optional<CycleHit> shortest_cycle(const Graph& g) {
    std::optional<CycleHit> best;
    const std::uint32_t n = g.order();
    std::vector<std::int32_t> dist(n), parent(n);
    for (std::uint32_t root = 0; root < n; ++root) {
        // any cycle shorter than `best` meets the BFS tree at depth < best/2
        const std::uint32_t cutoff = best ? best->length / 2 : n;
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<std::uint32_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const std::uint32_t u = queue.front();
            queue.pop_front();
            if (static_cast<std::uint32_t>(dist[u]) >= cutoff) continue;
            for (std::uint32_t w : g.neighbors(u)) {
                if (static_cast<std::int32_t>(w) == parent[u]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = static_cast<std::int32_t>(u);
                    queue.push_back(w);
                    continue;
                }
                // non-tree edge: cycle through the meeting point
                const std::uint32_t len = static_cast<std::uint32_t>(dist[u] + dist[w] + 1);
                if (best && len >= best->length) continue;
                // walk both parent chains to the fork
                std::vector<std::uint32_t> up_u, up_w;
                std::int64_t a = u, b = w;
                while (a != b) {
                    if (dist[a] >= dist[b]) {
                        up_u.push_back(static_cast<std::uint32_t>(a));
                        a = parent[a];
                    } else {
                        up_w.push_back(static_cast<std::uint32_t>(b));
                        b = parent[b];
                    }
                }
                CycleHit hit;
                hit.vertices = up_u;
                hit.vertices.push_back(static_cast<std::uint32_t>(a));
                hit.vertices.insert(hit.vertices.end(), up_w.rbegin(), up_w.rend());
                hit.length = static_cast<std::uint32_t>(hit.vertices.size());
                if (!best || hit.length < best->length) best = std::move(hit);
            }
        }
        if (best && best->length == 3) break; // cannot do better
    }
    return best;
}

Graph high_girth(const GenSpec& spec) {
    if (spec.param < 3) throw std::invalid_argument("high-girth: target girth must be >= 3");
    auto edges = gnp_edges(spec.n, spec.param2, derive_subseed(spec.seed, 0x67697274ULL));
    std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set(edges.begin(), edges.end());
    while (true) {
        Graph g(static_cast<std::uint32_t>(spec.n),
                {edge_set.begin(), edge_set.end()});
        const auto cyc = shortest_cycle(g);
        if (!cyc || cyc->length >= spec.param) return g;
        // delete the lexicographically least edge of the cycle found
        std::pair<std::uint32_t, std::uint32_t> least{UINT32_MAX, UINT32_MAX};
        const auto& vs = cyc->vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            const std::uint32_t a = vs[i];
            const std::uint32_t b = vs[(i + 1) % vs.size()];
            const std::pair<std::uint32_t, std::uint32_t> e{std::min(a, b), std::max(a, b)};
            least = std::min(least, e);
        }
        edge_set.erase(least);
    }
}

Graph random_regular(const GenSpec& spec) {
    const std::uint64_t n = spec.n;
    const std::uint64_t d = spec.param;
    if (d >= n || (n * d) % 2 != 0)
        throw std::invalid_argument("regular: infeasible degree sequence");
    for (std::uint64_t attempt = 0;; ++attempt) {
        if (attempt > 10000) throw std::runtime_error("regular: pairing model failed to converge");
        Rng rng(derive_subseed(spec.seed, 0x72656775ULL, attempt));
        std::vector<std::uint32_t> stubs(n * d);
        for (std::uint64_t i = 0; i < stubs.size(); ++i)
            stubs[i] = static_cast<std::uint32_t>(i / d);
        rng.shuffle(stubs);
        std::set<std::pair<std::uint32_t, std::uint32_t>> edge_set;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            std::uint32_t a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            if (a > b) std::swap(a, b);
            if (!edge_set.insert({a, b}).second) { ok = false; break; }
        }
        if (!ok) continue;
        return Graph(static_cast<std::uint32_t>(n), {edge_set.begin(), edge_set.end()});
    }
}

} // namespace

Graph gen(const GenSpec& spec) {
    if (spec.n == 0 || spec.param == 0)
        throw std::invalid_argument("generator parameters must be positive");
    if (spec.n > UINT32_MAX) throw std::invalid_argument("n too large");
    switch (spec.model) {
        case GenModel::Gnp:
            return Graph(static_cast<std::uint32_t>(spec.n),
                         gnp_edges(spec.n, spec.param, spec.seed));
        case GenModel::HighGirth:
            return high_girth(spec);
        case GenModel::DisjointCliques: {
            if (spec.param < 2 || spec.n % spec.param != 0)
                throw std::invalid_argument("cliques: clique order must divide n");
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
            for (std::uint64_t base = 0; base < spec.n; base += spec.param)
                for (std::uint64_t i = 0; i < spec.param; ++i)
                    for (std::uint64_t j = i + 1; j < spec.param; ++j)
                        edges.emplace_back(static_cast<std::uint32_t>(base + i),
                                           static_cast<std::uint32_t>(base + j));
            return Graph(static_cast<std::uint32_t>(spec.n), edges);
        }
        case GenModel::RandomRegular:
            return random_regular(spec);
    }
    throw std::logic_error("unreachable");
}

std::optional<std::uint32_t> girth(const Graph& g) {
    const auto cyc = shortest_cycle(g);
    if (!cyc) return std::nullopt;
    return cyc->length;
}

} // namespace minorlab
