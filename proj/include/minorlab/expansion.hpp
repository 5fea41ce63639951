#pragma once

#include "minorlab/graph.hpp"
#include "minorlab/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <variant>
#include <vector>

namespace minorlab {

enum class ProfileKind { DeltaExpander, DeltaNExpander };

/// Threshold at one scale: the real value (display only) and a certified
/// rational upper bound used for every actual comparison, by
/// cross-multiplication.
struct RequiredRatio {
    double approx = 0.0;
    Rational upper_bound;
    int scale = 0;
};

/// The required-expansion function psi(d, m). DeltaExpander demands
/// |N(S)| >= delta*2^d / (log2(m) * (log2 log2 m)^2) * |S|; DeltaNExpander
/// demands |N(S)| >= delta*2^d / log2(n) * |S| with n the ambient order.
/// The hypothesis of the density lemma is delta <= 1/256 (resp. < 1/4), but
/// any positive delta is accepted so tests can exercise nontrivial
/// violations; callers are expected to surface out-of-regime deltas.
struct ExpansionProfile {
    ProfileKind kind = ProfileKind::DeltaExpander;
    Rational delta;
    std::uint64_t ambient_n = 0; // DeltaNExpander only

    static ExpansionProfile delta_expander(const Rational& delta);
    static ExpansionProfile delta_n_expander(const Rational& delta, std::uint64_t n);

    /// Largest admissible scale, ⌊log2 log2 m⌋ - 1; -1 when the scale range
    /// is empty (m <= 3).
    static int scale_cap(std::uint64_t m);

    /// Largest d in [0, scale_cap] whose size bound |S| <= m / 2^(2^d)
    /// admits `size`; -1 when size > m/2.
    static int tightest_scale(std::uint64_t m, std::uint64_t size);

    /// psi(d, m); throws "scale range empty" / "scale out of range".
    RequiredRatio required_ratio(int d, std::uint64_t m) const;

    /// Rational upper bound of psi(d, m). Doubles exactly when d increments.
    Rational ratio_upper_bound(int d, std::uint64_t m) const;

    bool operator==(const ExpansionProfile&) const = default;
};

struct ExpansionViolation {
    VertexSet witness;
    int scale = 0;
    Rational observed_ratio;  // |N(S)| / |S|, exact
    Rational required_upper;  // rational upper bound on psi(scale, m)
};

/// Re-checks a violation against the live graph: witness in range, size
/// within the scale bound, recorded ratios exact, observed < required.
bool violation_is_genuine(const Graph& g, const ExpansionViolation& v);
/// Additionally requires required_upper to equal the profile's bound.
bool violation_matches_profile(const Graph& g, const ExpansionProfile& p,
                               const ExpansionViolation& v);

struct ExpanderCertificate {
    enum class Mode { Exact, HeuristicNoViolationFound };
    Mode mode = Mode::Exact;
    ProfileKind kind = ProfileKind::DeltaExpander;
    Rational delta;
    std::uint64_t ambient_n = 0;
    std::uint64_t graph_order = 0;
    std::vector<int> scales_checked;
    std::uint64_t probe_count = 0; // subsets enumerated or heuristic probes
};

using CheckResult = std::variant<ExpanderCertificate, ExpansionViolation>;

/// Exhaustive certification by subset enumeration (backed by the scan
/// kernels). Each subset is tested at its tightest applicable scale, which
/// dominates all smaller ones. Returns the first violation under the order
/// (scale asc, |S| asc, lexicographic members) or an Exact certificate.
/// Throws above `exact_cap` and on an empty scale range.
CheckResult check_expander_exact(const Graph& g, const ExpansionProfile& p,
                                 std::uint64_t exact_cap = 20);

/// Every genuine (S, d) violation pair, ordered (scale, |S|, lex members).
/// Same size cap as the exact checker.
std::vector<ExpansionViolation> enumerate_violations(const Graph& g,
                                                     const ExpansionProfile& p,
                                                     std::uint64_t exact_cap = 20);

struct HeuristicOptions {
    std::uint64_t probe_cap = 2048; // start-vertex sample size cap
    std::uint64_t seed = 0;
};

/// Incomplete violation search: per-component probes plus ball growth from
/// start vertices, stopping each growth at the first radius whose boundary
/// falls below the applicable threshold. Anything returned is re-verified
/// as genuine; absence of a result proves nothing.
std::optional<ExpansionViolation> find_violation_heuristic(
    const Graph& g, const ExpansionProfile& p, const HeuristicOptions& opts = {});

nlohmann::json profile_to_json(const ExpansionProfile& p);
ExpansionProfile profile_from_json(const nlohmann::json& j);
nlohmann::json violation_to_json(const ExpansionViolation& v, const ExpansionProfile& p,
                                 std::uint64_t graph_order);
nlohmann::json certificate_to_json(const ExpanderCertificate& c);
nlohmann::json check_result_to_json(const CheckResult& r, const ExpansionProfile& p,
                                    std::uint64_t graph_order);

} // namespace minorlab
