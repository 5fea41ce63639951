#include "minorlab/expansion.hpp"

#include "minorlab/bitkernels.hpp"
#include "minorlab/dyadic.hpp"
#include "minorlab/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minorlab {

ExpansionProfile ExpansionProfile::delta_expander(const Rational& delta) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    return {ProfileKind::DeltaExpander, delta, 0};
}

ExpansionProfile ExpansionProfile::delta_n_expander(const Rational& delta, std::uint64_t n) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    if (n < 4) throw std::invalid_argument("ambient n must be >= 4");
    return {ProfileKind::DeltaNExpander, delta, n};
}

int ExpansionProfile::scale_cap(std::uint64_t m) {
    if (m < 2) return -1;
    return floor_log2_log2(m) - 1;
}

int ExpansionProfile::tightest_scale(std::uint64_t m, std::uint64_t size) {
    const int cap = scale_cap(m);
    if (size == 0) return -1;
    for (int d = cap; d >= 0; --d) {
        const unsigned shift = 1u << d; // 2^d <= 32 for any uint64 order
        if (size <= (m >> shift)) return d;
    }
    return -1;
}

namespace {

// Rational lower bound of the threshold denominator. For DeltaExpander this
// is log2(m) * (log2 log2 m)^2, for DeltaNExpander log2(ambient_n); lower
// bounds of the denominator make the returned ratio an upper bound of psi.
Rational denominator_lower_bound(const ExpansionProfile& p, std::uint64_t m) {
    if (p.kind == ProfileKind::DeltaExpander) {
        const Log2Bounds L = log2_bounds(Rational(m));
        const Log2Bounds LL = log2_bounds(L.lower);
        return L.lower * LL.lower * LL.lower;
    }
    const Log2Bounds L = log2_bounds(Rational(p.ambient_n));
    return L.lower;
}

double psi_approx(const ExpansionProfile& p, int d, std::uint64_t m) {
    const double dd = rational_to_double(p.delta) * std::pow(2.0, d);
    if (p.kind == ProfileKind::DeltaExpander) {
        const double lg = std::log2(static_cast<double>(m));
        const double ll = std::log2(lg);
        return dd / (lg * ll * ll);
    }
    return dd / std::log2(static_cast<double>(p.ambient_n));
}

} // namespace

RequiredRatio ExpansionProfile::required_ratio(int d, std::uint64_t m) const {
    const int cap = scale_cap(m);
    if (cap < 0) throw std::invalid_argument("scale range empty");
    if (d < 0 || d > cap) throw std::invalid_argument("scale out of range");
    if (kind == ProfileKind::DeltaNExpander && ambient_n < 4)
        throw std::invalid_argument("ambient n must be >= 4");
    return {psi_approx(*this, d, m), ratio_upper_bound(d, m), d};
}

Rational ExpansionProfile::ratio_upper_bound(int d, std::uint64_t m) const {
    const int cap = scale_cap(m);
    if (cap < 0) throw std::invalid_argument("scale range empty");
    if (d < 0 || d > cap) throw std::invalid_argument("scale out of range");
    return delta * pow2_rational(d) / denominator_lower_bound(*this, m);
}

bool violation_is_genuine(const Graph& g, const ExpansionViolation& v) {
    const std::uint64_t m = g.order();
    if (v.witness.empty()) return false;
    for (std::uint32_t u : v.witness)
        if (u >= m) return false;
    const int cap = ExpansionProfile::scale_cap(m);
    if (v.scale < 0 || v.scale > cap) return false;
    const unsigned shift = 1u << v.scale;
    if (v.witness.size() > (m >> shift)) return false;
    const VertexSet nb = g.neighborhood(v.witness);
    const Rational observed(BigInt(nb.size()), BigInt(v.witness.size()));
    if (observed != v.observed_ratio) return false;
    return observed < v.required_upper;
}

bool violation_matches_profile(const Graph& g, const ExpansionProfile& p,
                               const ExpansionViolation& v) {
    if (!violation_is_genuine(g, v)) return false;
    return v.required_upper == p.ratio_upper_bound(v.scale, g.order());
}

namespace {

// Largest |N(S)| that still violates at ratio bound P/Q for |S| = k:
// nb * Q < k * P  <=>  nb <= ceil(kP/Q) - 1.
std::int8_t violating_limit(const Rational& bound, std::uint64_t k, std::uint64_t order) {
    const BigInt kp = BigInt(k) * numerator(bound);
    const BigInt q = denominator(bound);
    BigInt lim = (kp - 1) / q;
    if (lim < 0) lim = -1;
    if (lim > BigInt(order)) lim = BigInt(order);
    return static_cast<std::int8_t>(lim.convert_to<long>());
}

} // namespace

CheckResult check_expander_exact(const Graph& g, const ExpansionProfile& p,
                                 std::uint64_t exact_cap) {
    const std::uint64_t m = g.order();
    if (m == 0) throw std::invalid_argument("empty graph");
    if (m > exact_cap) throw std::invalid_argument("use heuristic finder");
    if (m > 24) throw std::invalid_argument("exact checker supports at most 24 vertices");
    const int cap = ExpansionProfile::scale_cap(m);
    if (cap < 0) throw std::invalid_argument("scale range empty");

    SubsetScanTable table;
    table.adjacency = g.bit_adjacency();
    std::vector<Rational> bounds(cap + 1);
    for (int d = 0; d <= cap; ++d) bounds[d] = p.ratio_upper_bound(d, m);
    for (std::uint64_t k = 0; k <= 32; ++k) {
        const int d = (k <= m) ? ExpansionProfile::tightest_scale(m, k) : -1;
        table.limit[k] = d < 0 ? -1 : violating_limit(bounds[d], k, m);
    }

    std::vector<std::uint32_t> hits;
    scan_subsets(table, 1, static_cast<std::uint32_t>(std::uint64_t(1) << m), hits);

    std::uint64_t probed = 0;
    {
        // number of nonempty subsets with an applicable scale (|S| <= m/2)
        BigInt total = 0, binom = 1;
        for (std::uint64_t k = 1; k <= m / 2; ++k) {
            binom = binom * (m - k + 1) / k;
            total += binom;
        }
        probed = to_u64(total);
    }

    if (hits.empty()) {
        ExpanderCertificate cert;
        cert.mode = ExpanderCertificate::Mode::Exact;
        cert.kind = p.kind;
        cert.delta = p.delta;
        cert.ambient_n = p.ambient_n;
        cert.graph_order = m;
        for (int d = 0; d <= cap; ++d) cert.scales_checked.push_back(d);
        cert.probe_count = probed;
        return cert;
    }

    // (scale asc, |S| asc, lexicographically least member sequence)
    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        const std::uint32_t diff = a ^ b;
        if (diff == 0) return false;
        return ((a >> __builtin_ctz(diff)) & 1u) != 0;
    };
    std::uint32_t best = hits.front();
    int best_d = ExpansionProfile::tightest_scale(m, __builtin_popcount(best));
    for (std::uint32_t s : hits) {
        const int k = __builtin_popcount(s);
        const int d = ExpansionProfile::tightest_scale(m, k);
        const int bk = __builtin_popcount(best);
        if (d != best_d ? d < best_d
                        : (k != bk ? k < bk : lex_less(s, best))) {
            best = s;
            best_d = d;
        }
    }
    ExpansionViolation v;
    v.witness = VertexSet::from_mask(best);
    v.scale = best_d;
    const VertexSet nb = g.neighborhood(v.witness);
    v.observed_ratio = Rational(BigInt(nb.size()), BigInt(v.witness.size()));
    v.required_upper = bounds[best_d];
    return v;
}

std::vector<ExpansionViolation> enumerate_violations(const Graph& g,
                                                     const ExpansionProfile& p,
                                                     std::uint64_t exact_cap) {
    const std::uint64_t m = g.order();
    if (m == 0) throw std::invalid_argument("empty graph");
    if (m > exact_cap) throw std::invalid_argument("use heuristic finder");
    if (m > 24) throw std::invalid_argument("exact checker supports at most 24 vertices");
    const int cap = ExpansionProfile::scale_cap(m);
    std::vector<ExpansionViolation> out;
    if (cap < 0) return out;

    SubsetScanTable table;
    table.adjacency = g.bit_adjacency();
    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        const std::uint32_t diff = a ^ b;
        if (diff == 0) return false;
        return ((a >> __builtin_ctz(diff)) & 1u) != 0;
    };
    for (int d = 0; d <= cap; ++d) {
        const Rational bound = p.ratio_upper_bound(d, m);
        const unsigned shift = 1u << d;
        const std::uint64_t size_cap = m >> shift;
        for (std::uint64_t k = 0; k <= 32; ++k)
            table.limit[k] = (k >= 1 && k <= size_cap) ? violating_limit(bound, k, m) : -1;
        std::vector<std::uint32_t> hits;
        scan_subsets(table, 1, static_cast<std::uint32_t>(std::uint64_t(1) << m), hits);
        std::sort(hits.begin(), hits.end(), [&](std::uint32_t a, std::uint32_t b) {
            const int ka = __builtin_popcount(a), kb = __builtin_popcount(b);
            if (ka != kb) return ka < kb;
            return lex_less(a, b);
        });
        for (std::uint32_t s : hits) {
            ExpansionViolation v;
            v.witness = VertexSet::from_mask(s);
            v.scale = d;
            const VertexSet nb = g.neighborhood(v.witness);
            v.observed_ratio = Rational(BigInt(nb.size()), BigInt(v.witness.size()));
            v.required_upper = bound;
            out.push_back(std::move(v));
        }
    }
    return out;
}

namespace {

struct Candidate {
    ExpansionViolation v;
};

// Deterministic preference among heuristic candidates: worst observed ratio
// first, then smaller scale, then larger witness, then lexicographic.
bool candidate_better(const ExpansionViolation& a, const ExpansionViolation& b) {
    if (a.observed_ratio != b.observed_ratio) return a.observed_ratio < b.observed_ratio;
    if (a.scale != b.scale) return a.scale < b.scale;
    if (a.witness.size() != b.witness.size()) return a.witness.size() > b.witness.size();
    return a.witness.members() < b.witness.members();
}

std::optional<ExpansionViolation> make_candidate(const Graph& g, const ExpansionProfile& p,
                                                 const VertexSet& s) {
    const std::uint64_t m = g.order();
    if (s.empty()) return std::nullopt;
    const int d = ExpansionProfile::tightest_scale(m, s.size());
    if (d < 0) return std::nullopt;
    ExpansionViolation v;
    v.witness = s;
    v.scale = d;
    const VertexSet nb = g.neighborhood(s);
    v.observed_ratio = Rational(BigInt(nb.size()), BigInt(s.size()));
    v.required_upper = p.ratio_upper_bound(d, m);
    if (v.observed_ratio >= v.required_upper) return std::nullopt;
    return v;
}

} // namespace

std::optional<ExpansionViolation> find_violation_heuristic(const Graph& g,
                                                           const ExpansionProfile& p,
                                                           const HeuristicOptions& opts) {
    const std::uint64_t m = g.order();
    if (m == 0) return std::nullopt;
    if (ExpansionProfile::scale_cap(m) < 0) return std::nullopt;

    std::optional<ExpansionViolation> best;
    auto offer = [&](const std::optional<ExpansionViolation>& c) {
        if (c && (!best || candidate_better(*c, *best))) best = c;
    };

    // Component probes: every component is a zero-boundary set, so any
    // component (or the complement of the largest) within the d = 0 size
    // bound is a violation outright.
    const auto comps = g.connected_components();
    if (comps.size() > 1) {
        std::size_t largest = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[largest].size()) largest = i;
        VertexSet rest;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i != largest) rest = rest.set_union(comps[i]);
            offer(make_candidate(g, p, comps[i]));
        }
        offer(make_candidate(g, p, rest));
        if (best) {
            if (!violation_matches_profile(g, p, *best))
                throw std::logic_error("heuristic produced a non-genuine violation");
            return best;
        }
    }

    // Ball growth from (a sample of) start vertices.
    std::vector<std::uint32_t> starts;
    if (m <= opts.probe_cap) {
        for (std::uint32_t v = 0; v < m; ++v) starts.push_back(v);
    } else {
        std::vector<std::uint32_t> all(m);
        for (std::uint32_t v = 0; v < m; ++v) all[v] = v;
        Rng rng(derive_subseed(opts.seed, 0x62616c6cULL, m));
        rng.shuffle(all);
        starts.assign(all.begin(), all.begin() + static_cast<long>(opts.probe_cap));
        std::sort(starts.begin(), starts.end());
    }

    std::vector<char> in_ball(m, 0);
    for (std::uint32_t start : starts) {
        std::fill(in_ball.begin(), in_ball.end(), 0);
        std::vector<std::uint32_t> ball_members{start};
        std::vector<std::uint32_t> frontier{start};
        in_ball[start] = 1;
        while (ball_members.size() * 2 <= m) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t v : frontier)
                for (std::uint32_t w : g.neighbors(v))
                    if (!in_ball[w]) {
                        in_ball[w] = 1;
                        next.push_back(w);
                    }
            const int d = ExpansionProfile::tightest_scale(m, ball_members.size());
            const Rational bound = p.ratio_upper_bound(d, m);
            const Rational observed(BigInt(next.size()), BigInt(ball_members.size()));
            if (observed < bound) {
                ExpansionViolation v;
                v.witness = VertexSet(ball_members);
                v.scale = d;
                v.observed_ratio = observed;
                v.required_upper = bound;
                offer(v);
                break;
            }
            for (std::uint32_t w : next) ball_members.push_back(w);
            frontier = std::move(next);
        }
    }

    if (best && !violation_matches_profile(g, p, *best))
        throw std::logic_error("heuristic produced a non-genuine violation");
    return best;
}

namespace {

const char* kind_name(ProfileKind k) {
    return k == ProfileKind::DeltaExpander ? "delta" : "delta_n";
}

} // namespace

nlohmann::json profile_to_json(const ExpansionProfile& p) {
    nlohmann::json j{{"kind", kind_name(p.kind)}, {"delta", rational_to_string(p.delta)}};
    if (p.kind == ProfileKind::DeltaNExpander) j["ambient_n"] = p.ambient_n;
    return j;
}

ExpansionProfile profile_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const Rational delta = parse_rational(j.at("delta").get<std::string>());
    if (kind == "delta") return ExpansionProfile::delta_expander(delta);
    if (kind == "delta_n")
        return ExpansionProfile::delta_n_expander(delta, j.at("ambient_n").get<std::uint64_t>());
    throw std::invalid_argument("unknown profile kind: " + kind);
}

nlohmann::json violation_to_json(const ExpansionViolation& v, const ExpansionProfile& p,
                                 std::uint64_t graph_order) {
    return nlohmann::json{
        {"schema", "minorlab.expansion/1"},
        {"mode", "violation"},
        {"kind", kind_name(p.kind)},
        {"delta", rational_to_string(p.delta)},
        {"graph_order", graph_order},
        {"scale", v.scale},
        {"witness", v.witness.members()},
        {"observed", rational_to_string(v.observed_ratio)},
        {"required_upper", rational_to_string(v.required_upper)},
    };
}

nlohmann::json certificate_to_json(const ExpanderCertificate& c) {
    return nlohmann::json{
        {"schema", "minorlab.expansion/1"},
        {"mode", c.mode == ExpanderCertificate::Mode::Exact ? "exact"
                                                            : "heuristic_no_violation"},
        {"kind", kind_name(c.kind)},
        {"delta", rational_to_string(c.delta)},
        {"graph_order", c.graph_order},
        {"scales_checked", c.scales_checked},
        {"probes", c.probe_count},
    };
}

nlohmann::json check_result_to_json(const CheckResult& r, const ExpansionProfile& p,
                                    std::uint64_t graph_order) {
    if (std::holds_alternative<ExpanderCertificate>(r))
        return certificate_to_json(std::get<ExpanderCertificate>(r));
    return violation_to_json(std::get<ExpansionViolation>(r), p, graph_order);
}

} // namespace minorlab
