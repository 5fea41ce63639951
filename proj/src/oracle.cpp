#include "minorlab/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace minorlab {

std::uint64_t MinorModel::order() const {
    std::vector<std::uint32_t> used;
    for (const auto& s : branch_sets)
        used.insert(used.end(), s.members().begin(), s.members().end());
    for (const auto& [pair, path] : paths) used.insert(used.end(), path.begin(), path.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return used.size();
}

MinorModel MinorModel::mapped_through(const std::vector<std::uint32_t>& ids) const {
    MinorModel out;
    out.t = t;
    for (const auto& s : branch_sets) {
        std::vector<std::uint32_t> mapped;
        mapped.reserve(s.size());
        for (std::uint32_t v : s) mapped.push_back(ids.at(v));
        out.branch_sets.emplace_back(VertexSet(std::move(mapped)));
    }
    for (const auto& [pair, path] : paths) {
        std::vector<std::uint32_t> mapped;
        mapped.reserve(path.size());
        for (std::uint32_t v : path) mapped.push_back(ids.at(v));
        out.paths.emplace(pair, std::move(mapped));
    }
    return out;
}

nlohmann::json minor_model_to_json(const MinorModel& m) {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : m.branch_sets) sets.push_back(s.members());
    nlohmann::json paths = nlohmann::json::object();
    for (const auto& [pair, path] : m.paths) {
        // 1-based pair keys "i-j", matching the usual P_{i,j} numbering
        paths[std::to_string(pair.first + 1) + "-" + std::to_string(pair.second + 1)] = path;
    }
    return nlohmann::json{{"schema", "minorlab.minor/1"},
                          {"t", m.t},
                          {"branch_sets", sets},
                          {"paths", paths},
                          {"order", m.order()}};
}

MinorModel minor_model_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != "minorlab.minor/1")
        throw std::invalid_argument("unsupported minor model schema");
    MinorModel m;
    m.t = j.at("t").get<std::uint32_t>();
    for (const auto& s : j.at("branch_sets"))
        m.branch_sets.emplace_back(VertexSet(s.get<std::vector<std::uint32_t>>()));
    for (const auto& [key, val] : j.at("paths").items()) {
        const auto dash = key.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad path key: " + key);
        const std::uint32_t i = static_cast<std::uint32_t>(std::stoul(key.substr(0, dash))) - 1;
        const std::uint32_t jj = static_cast<std::uint32_t>(std::stoul(key.substr(dash + 1))) - 1;
        m.paths[{i, jj}] = val.get<std::vector<std::uint32_t>>();
    }
    return m;
}

namespace {

bool set_connected(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<char> in(g.order(), 0), seen(g.order(), 0);
    for (std::uint32_t v : s) in[v] = 1;
    std::vector<std::uint32_t> stack{s.min()};
    seen[s.min()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == s.size();
}

} // namespace

ModelVerdict verify_minor_model_verdict(const Graph& g, const MinorModel& m) {
    auto fail = [](ModelDefect d, std::string detail) {
        return ModelVerdict{false, d, std::move(detail)};
    };
    if (m.t < 1 || m.branch_sets.size() != m.t) return fail(ModelDefect::BadT, "t mismatch");

    std::vector<int> owner(g.order(), -1);
    for (std::uint32_t i = 0; i < m.t; ++i) {
        const auto& s = m.branch_sets[i];
        if (s.empty()) return fail(ModelDefect::EmptyBranchSet, "set " + std::to_string(i));
        for (std::uint32_t v : s) {
            if (v >= g.order()) return fail(ModelDefect::IndexOutOfRange, "set vertex");
            if (owner[v] != -1) return fail(ModelDefect::BranchSetsOverlap,
                                            "vertex " + std::to_string(v));
            owner[v] = static_cast<int>(i);
        }
        if (!set_connected(g, s))
            return fail(ModelDefect::BranchSetDisconnected, "set " + std::to_string(i));
    }

    // every unordered pair needs a path
    for (std::uint32_t i = 0; i < m.t; ++i)
        for (std::uint32_t j = i + 1; j < m.t; ++j)
            if (!m.paths.count({i, j}))
                return fail(ModelDefect::MissingPath,
                            std::to_string(i + 1) + "-" + std::to_string(j + 1));
    if (m.paths.size() != static_cast<std::size_t>(m.t) * (m.t - 1) / 2)
        return fail(ModelDefect::MissingPath, "extra path keys");

    for (const auto& [pair, path] : m.paths) {
        const auto [i, j] = pair;
        if (i >= j || j >= m.t) return fail(ModelDefect::MissingPath, "bad pair");
        if (path.empty()) return fail(ModelDefect::EmptyPath, "");
        std::vector<std::uint32_t> sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail(ModelDefect::RepeatedVertexInPath, "");
        for (std::uint32_t v : path)
            if (v >= g.order()) return fail(ModelDefect::IndexOutOfRange, "path vertex");
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            if (!g.has_edge(path[s], path[s + 1]))
                return fail(ModelDefect::NonEdgeInPath,
                            std::to_string(path[s]) + "-" + std::to_string(path[s + 1]));
        if (path.size() < 2 && !(m.branch_sets[i].contains(path.front()) &&
                                 m.branch_sets[j].contains(path.front())))
            return fail(ModelDefect::EndpointOutsideBranchSet, "single-vertex path");
        if (!m.branch_sets[i].contains(path.front()))
            return fail(ModelDefect::EndpointOutsideBranchSet, "front");
        if (!m.branch_sets[j].contains(path.back()))
            return fail(ModelDefect::EndpointOutsideBranchSet, "back");
        for (std::uint32_t v : path) {
            const int o = owner[v];
            if (o != -1 && o != static_cast<int>(i) && o != static_cast<int>(j))
                return fail(ModelDefect::PathTouchesForeignBranchSet,
                            "vertex " + std::to_string(v));
        }
    }

    // Pairwise path intersections: a shared vertex must be an endpoint of
    // both paths and their index pairs must share a side.
    const auto is_endpoint = [](const std::vector<std::uint32_t>& p, std::uint32_t v) {
        return p.front() == v || p.back() == v;
    };
    for (auto a = m.paths.begin(); a != m.paths.end(); ++a) {
        auto b = a;
        for (++b; b != m.paths.end(); ++b) {
            const bool share_index = a->first.first == b->first.first ||
                                     a->first.first == b->first.second ||
                                     a->first.second == b->first.first ||
                                     a->first.second == b->first.second;
            for (std::uint32_t v : a->second) {
                if (std::find(b->second.begin(), b->second.end(), v) == b->second.end())
                    continue;
                if (!share_index || !is_endpoint(a->second, v) || !is_endpoint(b->second, v))
                    return fail(ModelDefect::PathsShareVertex, "vertex " + std::to_string(v));
            }
        }
    }

    return {true, ModelDefect::None, ""};
}

bool verify_minor_model(const Graph& g, const MinorModel& m) {
    return verify_minor_model_verdict(g, m).ok;
}

namespace {

// Contraction-form search state over bitmask vertex sets (n <= brute_cap).
struct BruteSearch {
    const Graph* g = nullptr;
    std::uint32_t n = 0;
    std::uint32_t t = 0;
    std::vector<std::uint32_t> adj;            // bitmask rows
    std::vector<std::uint32_t> connected_sets; // ascending mask order
    std::vector<std::uint32_t> nb_of_set;      // neighborhood mask per connected set
    std::vector<std::uint32_t> chosen;

    bool search(std::size_t depth, std::uint32_t used,
                const std::vector<std::uint32_t>& candidates) {
        if (depth == t) return true;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
            const std::uint32_t idx = candidates[ci];
            const std::uint32_t mask = connected_sets[idx];
            if (mask & used) continue;
            std::vector<std::uint32_t> next;
            next.reserve(candidates.size() - ci);
            const std::uint32_t used2 = used | mask;
            for (std::size_t cj = ci + 1; cj < candidates.size(); ++cj) {
                const std::uint32_t jdx = candidates[cj];
                const std::uint32_t jmask = connected_sets[jdx];
                if (jmask & used2) continue;
                if (!(nb_of_set[jdx] & mask)) continue; // must touch the new set
                next.push_back(jdx);
            }
            if (next.size() + depth + 1 < t) continue;
            chosen.push_back(idx);
            if (search(depth + 1, used2, next)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<MinorModel> brute_force_minor(const Graph& g, std::uint32_t t,
                                            std::uint64_t brute_cap) {
    if (g.order() > brute_cap) throw std::invalid_argument("graph above brute_cap");
    if (g.order() > 24) throw std::invalid_argument("brute force oracle supports at most 24 vertices");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const std::uint32_t n = g.order();
    if (n == 0) return std::nullopt;
    if (t > n) return std::nullopt;

    BruteSearch bs;
    bs.g = &g;
    bs.n = n;
    bs.t = t;
    bs.adj = g.bit_adjacency();

    // all connected subsets, ascending mask order
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        // flood fill from the lowest bit
        std::uint32_t seen = mask & (~mask + 1);
        while (true) {
            std::uint32_t grow = seen;
            std::uint32_t bits = seen;
            while (bits) {
                grow |= bs.adj[__builtin_ctz(bits)] & mask;
                bits &= bits - 1;
            }
            if (grow == seen) break;
            seen = grow;
        }
        if (seen != mask) continue;
        std::uint32_t nb = 0;
        std::uint32_t bits = mask;
        while (bits) {
            nb |= bs.adj[__builtin_ctz(bits)];
            bits &= bits - 1;
        }
        bs.connected_sets.push_back(mask);
        bs.nb_of_set.push_back(nb & ~mask);
    }

    std::vector<std::uint32_t> all(bs.connected_sets.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    if (!bs.search(0, 0, all)) return std::nullopt;

    MinorModel m;
    m.t = t;
    for (std::uint32_t idx : bs.chosen)
        m.branch_sets.emplace_back(VertexSet::from_mask(bs.connected_sets[idx]));
    // order branch sets by their minimum vertex for a stable certificate
    std::sort(m.branch_sets.begin(), m.branch_sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
    for (std::uint32_t i = 0; i < t; ++i)
        for (std::uint32_t j = i + 1; j < t; ++j) {
            // lexicographically least connecting edge becomes the path
            bool found = false;
            for (std::uint32_t u : m.branch_sets[i]) {
                for (std::uint32_t v : m.branch_sets[j])
                    if (g.has_edge(u, v)) {
                        m.paths[{i, j}] = {u, v};
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) throw std::logic_error("contraction model lost adjacency");
        }
    if (!verify_minor_model(g, m)) throw std::logic_error("oracle produced an invalid model");
    return m;
}

std::uint32_t hadwiger_number(const Graph& g, std::uint64_t brute_cap) {
    if (g.order() > brute_cap) throw std::invalid_argument("graph above brute_cap");
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    std::uint32_t t = 1;
    while (t < g.order() && brute_force_minor(g, t + 1, brute_cap)) ++t;
    return t;
}

} // namespace minorlab
