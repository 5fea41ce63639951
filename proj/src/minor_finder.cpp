#include "minorlab/minor_finder.hpp"

#include "minorlab/dyadic.hpp"
#include "minorlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace minorlab {

namespace {

Rational pow_rational(const Rational& base, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

std::uint64_t ceil_to_u64(const Rational& r) { return to_u64(rational_ceil(r)); }

} // namespace

MinorSearchParams MinorSearchParams::paper_defaults(const ExpansionProfile& p,
                                                    std::uint32_t t, std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("graph too small for minor search");
    MinorSearchParams out;
    out.profile = p;
    out.t = t;
    const Log2Bounds L = log2_bounds(Rational(m));
    out.degree_threshold = ceil_to_u64(pow_rational(L.upper, 4));
    out.ball_size_lo = ceil_nth_root(m, 5);
    out.ball_size_hi = floor_nth_root(m, 4);
    out.core_size_lo = ceil_to_u64(pow_rational(L.upper, 4));
    out.core_size_hi = ceil_to_u64(pow_rational(L.upper, 8));
    out.stuck_cap = std::max<std::uint64_t>(1, ceil_nth_root(m, 2) / 2);
    if (p.kind == ProfileKind::DeltaExpander) {
        const Log2Bounds LL = log2_bounds(L.upper);
        out.gamma = p.delta / (5 * LL.upper * LL.upper);
        out.path_budget = ceil_to_u64(pow_rational(L.upper, 2));
    } else {
        const Log2Bounds Ln = log2_bounds(Rational(p.ambient_n));
        out.gamma = p.delta * L.lower / (5 * Ln.upper);
        out.path_budget = ceil_to_u64(pow_rational(Ln.upper, 2));
    }
    out.flavor = "paper";
    return out;
}

MinorSearchParams MinorSearchParams::desk_defaults(const ExpansionProfile& p,
                                                   std::uint32_t t, std::uint64_t m) {
    MinorSearchParams out = paper_defaults(p, t, m);
    const Log2Bounds L = log2_bounds(Rational(m));
    out.degree_threshold = std::max<std::uint64_t>(t, ceil_to_u64(L.upper));
    out.core_size_lo = out.ball_size_lo;
    out.core_size_hi = out.ball_size_hi;
    out.stuck_cap = std::max<std::uint64_t>(out.stuck_cap, m / 3);
    out.flavor = "desk";
    return out;
}

namespace {

// Cumulative ball sizes |B_0(U)|, |B_1(U)|, ... inside g minus `forbidden`,
// computed until the ball stabilizes.
std::vector<std::uint64_t> ball_growth_sizes(const Graph& g, const VertexSet& seed,
                                             const std::vector<char>& forbidden) {
    std::vector<char> in(g.order(), 0);
    std::vector<std::uint32_t> frontier;
    std::uint64_t size = 0;
    for (std::uint32_t v : seed) {
        if (forbidden[v]) continue;
        in[v] = 1;
        frontier.push_back(v);
        ++size;
    }
    std::vector<std::uint64_t> sizes{size};
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t v : frontier)
            for (std::uint32_t w : g.neighbors(v))
                if (!in[w] && !forbidden[w]) {
                    in[w] = 1;
                    next.push_back(w);
                }
        if (next.empty()) break;
        size += next.size();
        sizes.push_back(size);
        frontier = std::move(next);
    }
    return sizes;
}

// Does the boundary-growth premise hold along the recorded sizes, relative
// to an ambient order mm? Required: for every k with |B_k| <= mm/2,
// |B_(k+2)| - |B_(k+1)| >= psi(d)/10 * |B_k| at the tightest scale d.
bool growth_precondition(const std::vector<std::uint64_t>& sizes, std::uint64_t mm,
                         const ExpansionProfile& p) {
    if (ExpansionProfile::scale_cap(mm) < 0) return false;
    auto size_at = [&](std::size_t k) {
        return k < sizes.size() ? sizes[k] : sizes.back();
    };
    for (std::size_t k = 0;; ++k) {
        const std::uint64_t sk = size_at(k);
        if (sk == 0) return false;
        if (sk * 2 > mm) return true; // covered half the graph while growing
        const int d = ExpansionProfile::tightest_scale(mm, sk);
        const Rational bound = p.ratio_upper_bound(d, mm);
        const std::uint64_t boundary = size_at(k + 2) - size_at(k + 1);
        // boundary >= bound/10 * sk, by cross-multiplication
        if (BigInt(boundary) * denominator(bound) * 10 < BigInt(sk) * numerator(bound))
            return false;
    }
}

double claimed_path_bound(const ExpansionProfile& p, std::uint64_t mm) {
    const double delta = rational_to_double(p.delta);
    if (p.kind == ProfileKind::DeltaExpander) {
        const double lg = std::log2(static_cast<double>(mm));
        const double ll = std::log2(lg);
        return 20.0 / delta * lg * ll * ll * ll;
    }
    const double lg = std::log2(static_cast<double>(p.ambient_n));
    return 20.0 / delta * lg * std::log2(lg);
}

} // namespace

PathSearch grow_ball_path(const Graph& g, const VertexSet& u, const VertexSet& v,
                          const VertexSet& forbidden, const ExpansionProfile& profile) {
    if (u.intersects(v) || u.intersects(forbidden) || v.intersects(forbidden))
        throw std::invalid_argument("grow_ball_path: sets must be pairwise disjoint");
    if (u.empty() || v.empty())
        throw std::invalid_argument("grow_ball_path: endpoint sets must be nonempty");

    std::vector<char> forb(g.order(), 0);
    for (std::uint32_t x : forbidden) forb[x] = 1;
    const std::uint64_t mm = g.order() - forbidden.size();

    PathSearch out;
    if (mm >= 2 && ExpansionProfile::scale_cap(mm) >= 0) {
        out.growth_precondition_held =
            growth_precondition(ball_growth_sizes(g, u, forb), mm, profile) &&
            growth_precondition(ball_growth_sizes(g, v, forb), mm, profile);
        out.length_bound = claimed_path_bound(profile, mm);
    }

    // BFS from U to the first vertex of V.
    std::vector<int> parent(g.order(), -2);
    std::vector<char> target(g.order(), 0);
    for (std::uint32_t x : v) target[x] = 1;
    std::deque<std::uint32_t> queue;
    for (std::uint32_t x : u) {
        parent[x] = -1;
        queue.push_back(x);
    }
    std::int64_t hit = -1;
    while (!queue.empty() && hit < 0) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        if (target[cur]) {
            hit = cur;
            break;
        }
        for (std::uint32_t w : g.neighbors(cur)) {
            if (forb[w] || parent[w] != -2) continue;
            parent[w] = static_cast<int>(cur);
            if (target[w]) {
                hit = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (hit < 0) return out;

    std::vector<std::uint32_t> path;
    for (std::int64_t x = hit;;) {
        path.push_back(static_cast<std::uint32_t>(x));
        if (parent[x] == -1) break;
        x = parent[x];
    }
    std::reverse(path.begin(), path.end());
    out.path = std::move(path);

    if (out.growth_precondition_held &&
        static_cast<double>(out.path->size() - 1) > out.length_bound)
        throw std::logic_error("path exceeded the claimed length bound");
    return out;
}

bool expanding_ball_is_valid(const Graph& g, const ExpandingBall& b) {
    if (b.member_set.empty() || !b.member_set.contains(b.center)) return false;
    const auto ind = g.induced_subgraph(b.member_set);
    // center in local coordinates
    const auto& ids = ind.original_ids;
    const auto it = std::lower_bound(ids.begin(), ids.end(), b.center);
    const auto local = static_cast<std::uint32_t>(it - ids.begin());
    std::vector<char> none(ind.graph.order(), 0);
    const auto sizes = ball_growth_sizes(ind.graph, VertexSet::single(local), none);
    auto size_at = [&](std::size_t k) {
        return k < sizes.size() ? sizes[k] : sizes.back();
    };
    std::vector<std::uint64_t> expect(b.radius + 1);
    for (std::uint32_t k = 0; k <= b.radius; ++k) expect[k] = size_at(k);
    if (expect != b.layer_sizes) return false;
    if (size_at(b.radius) != b.member_set.size()) return false;
    // growth condition for 1 <= i <= radius-1
    const BigInt num = numerator(Rational(1) + b.gamma);
    const BigInt den = denominator(Rational(1) + b.gamma);
    for (std::uint32_t i = 1; i + 1 <= b.radius; ++i)
        if (BigInt(b.layer_sizes[i + 1]) * den < BigInt(b.layer_sizes[i]) * num)
            return false;
    return true;
}

HubsOrBallsResult find_hubs_or_balls(const Graph& g, const MinorSearchParams& params) {
    if (params.t < 2) throw std::invalid_argument("t must be >= 2");
    const std::uint32_t n = g.order();
    HubsOrBallsResult out;

    // Hub branch: t vertices of degree >= threshold, highest degrees first.
    std::vector<std::uint32_t> eligible;
    for (std::uint32_t v = 0; v < n; ++v)
        if (g.degree(v) >= params.degree_threshold) eligible.push_back(v);
    if (eligible.size() >= params.t) {
        std::sort(eligible.begin(), eligible.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        HubsOrBalls hb;
        hb.kind = HubsOrBalls::Kind::Hubs;
        hb.hubs.assign(eligible.begin(), eligible.begin() + params.t);
        std::sort(hb.hubs.begin(), hb.hubs.end());
        out.found = std::move(hb);
        return out;
    }

    // Ball branch: grow away from the strictly-high-degree set.
    std::vector<char> removed(n, 0);
    for (std::uint32_t v = 0; v < n; ++v)
        if (g.degree(v) > params.degree_threshold) removed[v] = 1;

    const BigInt growth_num = numerator(Rational(1) + params.gamma);
    const BigInt growth_den = denominator(Rational(1) + params.gamma);

    HubsOrBalls hb;
    hb.kind = HubsOrBalls::Kind::Balls;
    std::uint32_t cursor = 0;
    while (hb.balls.size() < params.t) {
        while (cursor < n && removed[cursor]) ++cursor;
        if (cursor >= n) {
            out.failure.reason = "no candidate start vertices left";
            return out;
        }
        const std::uint32_t start = cursor;

        // grow B_k(start) in the remaining graph, tracking layers
        std::vector<char> in(n, 0);
        std::vector<std::uint32_t> members{start};
        std::vector<std::uint32_t> frontier{start};
        in[start] = 1;
        std::vector<std::uint64_t> sizes{1};
        std::optional<std::uint32_t> accepted_radius;
        std::string stuck_why;
        for (std::uint32_t k = 0;; ++k) {
            const std::uint64_t sk = sizes[k];
            if (sk >= params.ball_size_lo && sk <= params.ball_size_hi) {
                accepted_radius = k;
                break;
            }
            if (sk > params.ball_size_hi) {
                stuck_why = "overshoot";
                break;
            }
            std::vector<std::uint32_t> next;
            for (std::uint32_t x : frontier)
                for (std::uint32_t w : g.neighbors(x))
                    if (!in[w] && !removed[w]) {
                        in[w] = 1;
                        next.push_back(w);
                    }
            const std::uint64_t sk1 = sk + next.size();
            if (BigInt(sk1) * growth_den < BigInt(sk) * growth_num) {
                stuck_why = "stalled";
                break;
            }
            sizes.push_back(sk1);
            for (std::uint32_t w : next) members.push_back(w);
            frontier = std::move(next);
        }

        if (accepted_radius) {
            ExpandingBall ball;
            ball.center = start;
            ball.radius = *accepted_radius;
            ball.gamma = params.gamma;
            ball.layer_sizes = sizes;
            ball.member_set = VertexSet(members);
            for (std::uint32_t w : ball.member_set) removed[w] = 1;
            hb.balls.push_back(std::move(ball));
            continue;
        }

        const VertexSet stuck_set{members};
        for (std::uint32_t w : stuck_set) removed[w] = 1;
        out.failure.stuck_total += stuck_set.size();
        out.failure.stuck.push_back({start, stuck_set, stuck_why});
        if (out.failure.stuck_total > params.stuck_cap) {
            out.failure.reason = "stuck budget exceeded";
            return out;
        }
    }

    for (const auto& b : hb.balls)
        if (!expanding_ball_is_valid(g, b))
            throw std::logic_error("grown ball failed its own invariant");
    out.found = std::move(hb);
    return out;
}

AssemblyResult assemble_minor_hubs(const Graph& g, const std::vector<std::uint32_t>& hubs,
                                   const MinorSearchParams& params) {
    AssemblyResult out;
    const std::uint32_t t = static_cast<std::uint32_t>(hubs.size());
    if (t < 2) throw std::invalid_argument("need at least two hubs");
    {
        std::vector<std::uint32_t> sorted = hubs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("hubs must be distinct");
    }

    MinorModel model;
    model.t = t;
    for (std::uint32_t h : hubs) model.branch_sets.push_back(VertexSet::single(h));

    VertexSet internals;
    for (std::uint32_t i = 0; i < t; ++i) {
        for (std::uint32_t j = i + 1; j < t; ++j) {
            VertexSet forb = internals;
            for (std::uint32_t k = 0; k < t; ++k)
                if (k != i && k != j) forb = forb.set_union(VertexSet::single(hubs[k]));
            if (forb.size() > params.path_budget) {
                out.failure.reason = "path budget exceeded";
                out.failure.pair = {i, j};
                return out;
            }
            PathSearch ps = grow_ball_path(g, VertexSet::single(hubs[i]),
                                           VertexSet::single(hubs[j]), forb, params.profile);
            if (!ps.path) {
                out.failure.reason = "pair disconnected";
                out.failure.pair = {i, j};
                return out;
            }
            const auto& path = *ps.path;
            std::vector<std::uint32_t> internal(path.begin() + 1, path.end() - 1);
            internals = internals.set_union(VertexSet(internal));
            model.paths[{i, j}] = path;
        }
    }

    if (!verify_minor_model(g, model))
        throw std::logic_error("hub assembly produced an invalid model");
    out.model = std::move(model);
    return out;
}

namespace {

// Shortest path from `from` to `to` within the induced subgraph carrier
// (local coordinates).
std::vector<std::uint32_t> shortest_path_within(const Graph& g, std::uint32_t from,
                                                std::uint32_t to) {
    std::vector<int> parent(g.order(), -2);
    std::deque<std::uint32_t> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        const std::uint32_t cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (std::uint32_t w : g.neighbors(cur))
            if (parent[w] == -2) {
                parent[w] = static_cast<int>(cur);
                queue.push_back(w);
            }
    }
    if (parent[to] == -2) throw std::logic_error("core entry unreachable from center");
    std::vector<std::uint32_t> path;
    for (std::int64_t x = to;;) {
        path.push_back(static_cast<std::uint32_t>(x));
        if (parent[x] == -1) break;
        x = parent[x];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

AssemblyResult assemble_minor_balls(const Graph& g, const std::vector<ExpandingBall>& balls,
                                    const MinorSearchParams& params) {
    AssemblyResult out;
    const std::uint32_t t = static_cast<std::uint32_t>(balls.size());
    if (t < 2) throw std::invalid_argument("need at least two balls");
    for (std::uint32_t i = 0; i < t; ++i) {
        if (!expanding_ball_is_valid(g, balls[i]))
            throw std::invalid_argument("ball " + std::to_string(i) + " fails its invariant");
        for (std::uint32_t j = i + 1; j < t; ++j)
            if (balls[i].member_set.intersects(balls[j].member_set))
                throw std::invalid_argument("balls must be disjoint");
    }

    // Trim each ball to a core C_i: the smallest-radius ball (inside S_i)
    // whose size reaches the core window.
    std::vector<VertexSet> cores(t);
    std::vector<Graph::Induced> carriers;
    carriers.reserve(t);
    for (std::uint32_t i = 0; i < t; ++i) {
        carriers.push_back(g.induced_subgraph(balls[i].member_set));
        const auto& ind = carriers.back();
        const auto& ids = ind.original_ids;
        const auto it = std::lower_bound(ids.begin(), ids.end(), balls[i].center);
        const auto local_center = static_cast<std::uint32_t>(it - ids.begin());
        VertexSet core = VertexSet::single(local_center);
        std::uint32_t radius = 0;
        while (core.size() < params.core_size_lo) {
            const VertexSet next = ind.graph.ball(VertexSet::single(local_center), radius + 1);
            if (next.size() == core.size()) break; // stabilized below the window
            core = next;
            ++radius;
        }
        if (core.size() < params.core_size_lo) {
            out.failure.reason = "ball too small to trim";
            out.failure.pair = {i, i};
            return out;
        }
        if (core.size() > params.core_size_hi) {
            out.failure.reason = "core window overshoot";
            out.failure.pair = {i, i};
            return out;
        }
        std::vector<std::uint32_t> global;
        for (std::uint32_t local : core) global.push_back(ids[local]);
        cores[i] = VertexSet(global);
    }

    // Pairwise core-to-core paths avoiding the other cores and previously
    // used internal vertices.
    MinorModel model;
    model.t = t;
    std::vector<VertexSet> branch_sets(t);
    VertexSet internals;
    for (std::uint32_t i = 0; i < t; ++i) {
        for (std::uint32_t j = i + 1; j < t; ++j) {
            if (internals.size() > params.path_budget) {
                out.failure.reason = "path budget exceeded";
                out.failure.pair = {i, j};
                return out;
            }
            VertexSet forb = internals;
            for (std::uint32_t k = 0; k < t; ++k)
                if (k != i && k != j) forb = forb.set_union(cores[k]);
            PathSearch ps = grow_ball_path(g, cores[i], cores[j], forb, params.profile);
            if (!ps.path) {
                out.failure.reason = "pair disconnected";
                out.failure.pair = {i, j};
                return out;
            }
            const auto& path = *ps.path;
            std::vector<std::uint32_t> internal(path.begin() + 1, path.end() - 1);
            internals = internals.set_union(VertexSet(internal));
            model.paths[{i, j}] = path;

            // star paths Q: wire each entry to its center inside the core
            const std::pair<std::uint32_t, std::uint32_t> sides[2] = {
                {i, path.front()}, {j, path.back()}};
            for (const auto& [side, entry] : sides) {
                const auto& ind = carriers[side];
                const auto& ids = ind.original_ids;
                auto to_local = [&](std::uint32_t v) {
                    const auto lit = std::lower_bound(ids.begin(), ids.end(), v);
                    return static_cast<std::uint32_t>(lit - ids.begin());
                };
                const auto q = shortest_path_within(ind.graph, to_local(balls[side].center),
                                                    to_local(entry));
                std::vector<std::uint32_t> global;
                for (std::uint32_t local : q) global.push_back(ids[local]);
                branch_sets[side] = branch_sets[side].set_union(VertexSet(global));
            }
        }
    }
    for (std::uint32_t i = 0; i < t; ++i) model.branch_sets.push_back(branch_sets[i]);

    if (!verify_minor_model(g, model))
        throw std::logic_error("ball assembly produced an invalid model");
    out.model = std::move(model);
    return out;
}

FindMinorReport find_small_minor(const Graph& g, std::uint32_t t, const Rational& epsilon,
                                 const Rational& c_of_t, const FindMinorConfig& cfg) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    if (epsilon <= 0 || c_of_t <= 0) throw std::invalid_argument("epsilon and c(t) must be positive");
    if (g.order() == 0) throw std::invalid_argument("empty graph");
    const Rational density = g.average_degree();
    if (density < c_of_t + epsilon) throw std::invalid_argument("density below c(t)+eps");

    FindMinorReport report;
    report.input_density = density;
    report.delta = epsilon / (8 * c_of_t);
    report.out_of_regime_delta = report.delta >= Rational(1, 4);

    Graph expander;
    std::vector<std::uint32_t> ids;
    if (g.order() < 4) {
        expander = g;
        ids.resize(g.order());
        for (std::uint32_t i = 0; i < g.order(); ++i) ids[i] = i;
        report.extraction_outcome = ExtractionOutcome::SmallGraphStop;
    } else {
        const auto profile = ExpansionProfile::delta_n_expander(report.delta, g.order());
        auto extraction = extract_expander(g, profile, cfg.pipeline);
        report.extraction_outcome = extraction.trace.outcome;
        report.extraction_steps = extraction.trace.steps.size();
        expander = std::move(extraction.expander);
        ids = std::move(extraction.original_ids);
    }
    report.expander_order = expander.order();
    report.expander_density = expander.average_degree();

    std::optional<MinorModel> local_model;
    if (expander.order() <= cfg.brute_cap) {
        report.regime = "brute";
        report.params_flavor = "-";
        local_model = brute_force_minor(expander, t, cfg.brute_cap);
        if (!local_model) report.failure.reason = "no K_t minor in the extracted graph";
    } else {
        const auto profile = ExpansionProfile::delta_n_expander(report.delta, g.order());
        MinorSearchParams params =
            cfg.params_override
                ? *cfg.params_override
                : (cfg.desk_params ? MinorSearchParams::desk_defaults(profile, t, expander.order())
                                   : MinorSearchParams::paper_defaults(profile, t, expander.order()));
        report.params_flavor = params.flavor;
        auto hb = find_hubs_or_balls(expander, params);
        if (!hb.found) {
            report.regime = "none";
            report.failure = std::move(hb.failure);
        } else if (hb.found->kind == HubsOrBalls::Kind::Hubs) {
            report.regime = "hubs";
            auto asmres = assemble_minor_hubs(expander, hb.found->hubs, params);
            if (asmres.model) local_model = std::move(asmres.model);
            else report.failure = std::move(asmres.failure);
        } else {
            report.regime = "balls";
            auto asmres = assemble_minor_balls(expander, hb.found->balls, params);
            if (asmres.model) local_model = std::move(asmres.model);
            else report.failure = std::move(asmres.failure);
        }
    }

    if (local_model) {
        MinorModel mapped = local_model->mapped_through(ids);
        if (!verify_minor_model(g, mapped))
            throw std::logic_error("mapped model failed verification in the original graph");
        report.order = mapped.order();
        const double lg = std::log2(static_cast<double>(g.order()));
        const double denom = rational_to_double(c_of_t) * t * t /
                             rational_to_double(epsilon) * lg *
                             (lg > 1 ? std::log2(lg) : 1.0);
        report.order_bound_ratio = static_cast<double>(report.order) / denom;
        report.model = std::move(mapped);
    }
    return report;
}

} // namespace minorlab
