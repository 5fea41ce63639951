#include "minorlab/extraction.hpp"

#include "minorlab/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorlab {

std::string outcome_name(ExtractionOutcome o) {
    switch (o) {
        case ExtractionOutcome::ExpanderCertified: return "expander_certified";
        case ExtractionOutcome::HeuristicNoViolationFound: return "heuristic_no_violation";
        case ExtractionOutcome::SmallGraphStop: return "small_graph_stop";
        case ExtractionOutcome::ComponentFallback: return "component_fallback";
    }
    return "?";
}

SplitResult split_on_violation(const Graph& g, const ExpansionViolation& v) {
    if (!violation_is_genuine(g, v)) throw std::invalid_argument("stale violation");
    const Rational density = g.average_degree();
    const VertexSet all = VertexSet::full(g.order());
    const VertexSet rest = all.set_minus(v.witness);
    if (rest.empty()) throw std::logic_error("violation spans the whole graph");

    const auto rest_ind = g.induced_subgraph(rest);
    const Rational rest_density = rest_ind.graph.average_degree();

    SplitResult out;
    if (rest_density >= density) {
        out.case_taken = StepCase::Case1Removal;
        out.kept = rest.members();
        out.next = rest_ind.graph;
        out.next_original_ids = rest_ind.original_ids;
        out.density_after = rest_density;
        return out;
    }

    const VertexSet closure = v.witness.set_union(g.neighborhood(v.witness));
    if (closure.size() == g.order()) {
        // Degenerate: S ∪ N(S) = V would not shrink. Remove one
        // lowest-degree vertex instead; this step is excluded from the
        // telescoped density accounting.
        const VertexSet keep = all.set_minus(VertexSet::single(g.min_degree_vertex()));
        const auto ind = g.induced_subgraph(keep);
        out.case_taken = StepCase::FallbackRemoval;
        out.kept = keep.members();
        out.next = ind.graph;
        out.next_original_ids = ind.original_ids;
        out.density_after = ind.graph.average_degree();
        return out;
    }

    const auto closure_ind = g.induced_subgraph(closure);
    out.case_taken = StepCase::Case2Restriction;
    out.kept = closure.members();
    out.next = closure_ind.graph;
    out.next_original_ids = closure_ind.original_ids;
    out.density_after = closure_ind.graph.average_degree();
    // Claim-observation guarantee; failure indicates a bug, not bad input.
    if (out.density_after < (Rational(1) - v.required_upper) * density)
        throw std::logic_error("Case 2 density bound violated");
    return out;
}

namespace {

std::vector<IntervalTally> tally_steps(const std::vector<ExtractionStep>& steps) {
    std::map<int, std::map<int, std::uint64_t>> acc;
    for (const auto& s : steps) {
        if (s.case_taken != StepCase::Case2Restriction) continue;
        acc[dyadic_interval_index(s.order_before)][s.violation.scale] += 1;
    }
    std::vector<IntervalTally> out;
    for (auto& [k, by_scale] : acc) out.push_back({k, std::move(by_scale)});
    return out;
}

Rational floor_factor(const ExpansionProfile& p) {
    return p.kind == ProfileKind::DeltaExpander ? Rational(1) - p.delta
                                                : Rational(1) - 2 * p.delta;
}

} // namespace

ExtractionResult extract_expander_with_finder(const Graph& g, const ExpansionProfile& p,
                                              const PipelineConfig& cfg,
                                              const ViolationFinder& finder,
                                              const std::string& finder_name) {
    if (g.order() == 0) throw std::invalid_argument("empty graph");

    ExtractionTrace trace;
    trace.input_order = g.order();
    trace.input_edges = g.edge_count();
    trace.input_density = g.average_degree();
    trace.profile = p;
    trace.stop_order = cfg.stop_order(p.kind);
    trace.exact_cap = cfg.exact_cap;
    trace.finder = finder_name;

    Graph cur = g;
    std::vector<std::uint32_t> ids(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) ids[i] = i;

    bool stopped_small = false;
    bool certified_exact = false;
    std::uint64_t iteration = 0;
    while (true) {
        if (iteration > trace.input_order)
            throw std::logic_error("extraction failed to terminate");
        if (cur.order() <= trace.stop_order) {
            stopped_small = true;
            break;
        }
        std::optional<ExpansionViolation> viol = finder(cur, p);
        trace.finder_probes += 1;
        if (!viol) {
            certified_exact = cur.order() <= cfg.exact_cap;
            break;
        }
        ExtractionStep step;
        step.iteration = iteration++;
        step.order_before = cur.order();
        step.density_before = cur.average_degree();
        step.violation = *viol;
        SplitResult split = split_on_violation(cur, *viol);
        step.case_taken = split.case_taken;
        step.kept = split.kept;
        step.order_after = split.next.order();
        step.density_after = split.density_after;
        if (split.case_taken == StepCase::FallbackRemoval) trace.had_fallback = true;
        trace.steps.push_back(std::move(step));

        std::vector<std::uint32_t> next_ids(split.next_original_ids.size());
        for (std::size_t i = 0; i < next_ids.size(); ++i)
            next_ids[i] = ids[split.next_original_ids[i]];
        ids = std::move(next_ids);
        cur = std::move(split.next);
    }

    Graph result_graph;
    std::vector<std::uint32_t> result_ids;
    if (stopped_small) {
        auto densest = cur.densest_component();
        trace.outcome = densest.graph.order() == cur.order()
                            ? ExtractionOutcome::SmallGraphStop
                            : ExtractionOutcome::ComponentFallback;
        result_ids.resize(densest.original_ids.size());
        for (std::size_t i = 0; i < result_ids.size(); ++i)
            result_ids[i] = ids[densest.original_ids[i]];
        result_graph = std::move(densest.graph);
    } else {
        trace.outcome = certified_exact ? ExtractionOutcome::ExpanderCertified
                                        : ExtractionOutcome::HeuristicNoViolationFound;
        result_graph = std::move(cur);
        result_ids = std::move(ids);
    }

    trace.final_vertices = result_ids;
    trace.final_density = result_graph.average_degree();
    trace.tallies = tally_steps(trace.steps);

    if (!trace.had_fallback &&
        trace.final_density < floor_factor(p) * trace.input_density)
        throw std::logic_error("telescoped density floor violated");

    return {std::move(result_graph), std::move(result_ids), std::move(trace)};
}

ExtractionResult extract_expander(const Graph& g, const ExpansionProfile& p,
                                  const PipelineConfig& cfg) {
    HeuristicOptions hopts{cfg.probe_cap, cfg.rng_seed};
    ViolationFinder finder = [&cfg, hopts](const Graph& cur,
                                           const ExpansionProfile& prof)
        -> std::optional<ExpansionViolation> {
        if (cur.order() <= cfg.exact_cap && cur.order() <= 24) {
            if (ExpansionProfile::scale_cap(cur.order()) < 0) return std::nullopt;
            CheckResult r = check_expander_exact(cur, prof, cfg.exact_cap);
            if (std::holds_alternative<ExpansionViolation>(r))
                return std::get<ExpansionViolation>(r);
            return std::nullopt;
        }
        return find_violation_heuristic(cur, prof, hopts);
    };
    return extract_expander_with_finder(g, p, cfg, finder, "auto");
}

bool verify_extraction_trace(const Graph& original, const ExtractionTrace& trace) {
    if (trace.input_order != original.order()) return false;
    if (trace.input_edges != original.edge_count()) return false;
    if (original.order() == 0) throw std::invalid_argument("empty graph");
    if (trace.input_density != original.average_degree()) return false;

    Graph cur = original;
    std::vector<std::uint32_t> ids(original.order());
    for (std::uint32_t i = 0; i < original.order(); ++i) ids[i] = i;

    std::uint64_t expected_iteration = 0;
    for (const auto& step : trace.steps) {
        if (step.iteration != expected_iteration++) return false;
        if (step.order_before != cur.order()) return false;
        if (step.density_before != cur.average_degree()) return false;
        if (!violation_matches_profile(cur, trace.profile, step.violation)) return false;

        SplitResult split = split_on_violation(cur, step.violation);
        if (split.case_taken != step.case_taken) return false;
        if (split.kept != step.kept) return false;
        if (split.next.order() != step.order_after) return false;
        if (split.density_after != step.density_after) return false;

        switch (step.case_taken) {
            case StepCase::Case1Removal:
                if (step.density_after < step.density_before) return false;
                break;
            case StepCase::Case2Restriction: {
                const Rational gamma = step.violation.required_upper;
                if (step.density_after < (Rational(1) - gamma) * step.density_before)
                    return false;
                const std::uint64_t nb_size =
                    cur.neighborhood(step.violation.witness).size();
                const unsigned shift = 1u << step.violation.scale;
                if (step.order_after > (step.order_before >> shift) + nb_size)
                    return false;
                if (step.order_after >= step.order_before) return false;
                break;
            }
            case StepCase::FallbackRemoval:
                if (step.order_after + 1 != step.order_before) return false;
                break;
        }

        std::vector<std::uint32_t> next_ids(split.next_original_ids.size());
        for (std::size_t i = 0; i < next_ids.size(); ++i)
            next_ids[i] = ids[split.next_original_ids[i]];
        ids = std::move(next_ids);
        cur = std::move(split.next);
    }

    // End-state checks.
    std::vector<std::uint32_t> final_ids;
    Graph final_graph;
    switch (trace.outcome) {
        case ExtractionOutcome::SmallGraphStop:
        case ExtractionOutcome::ComponentFallback: {
            if (cur.order() > trace.stop_order) return false;
            auto densest = cur.densest_component();
            const bool proper = densest.graph.order() != cur.order();
            if (proper != (trace.outcome == ExtractionOutcome::ComponentFallback))
                return false;
            final_ids.resize(densest.original_ids.size());
            for (std::size_t i = 0; i < final_ids.size(); ++i)
                final_ids[i] = ids[densest.original_ids[i]];
            final_graph = std::move(densest.graph);
            break;
        }
        case ExtractionOutcome::ExpanderCertified: {
            if (cur.order() <= trace.stop_order) return false;
            if (cur.order() > trace.exact_cap || cur.order() > 24) return false;
            if (ExpansionProfile::scale_cap(cur.order()) >= 0) {
                CheckResult r = check_expander_exact(cur, trace.profile, trace.exact_cap);
                if (!std::holds_alternative<ExpanderCertificate>(r)) return false;
            }
            final_ids = ids;
            final_graph = cur;
            break;
        }
        case ExtractionOutcome::HeuristicNoViolationFound:
            if (cur.order() <= trace.stop_order) return false;
            final_ids = ids;
            final_graph = cur;
            break;
    }
    if (final_ids != trace.final_vertices) return false;
    if (final_graph.average_degree() != trace.final_density) return false;

    // Interval tallies: recompute, compare, and enforce sum a_d 2^d <= 2^k.
    const auto tallies = tally_steps(trace.steps);
    if (tallies.size() != trace.tallies.size()) return false;
    for (std::size_t i = 0; i < tallies.size(); ++i) {
        if (tallies[i].interval != trace.tallies[i].interval) return false;
        if (tallies[i].case2_by_scale != trace.tallies[i].case2_by_scale) return false;
        BigInt weighted = 0;
        for (const auto& [d, a] : tallies[i].case2_by_scale)
            weighted += BigInt(a) << d;
        if (weighted > (BigInt(1) << tallies[i].interval)) return false;
    }

    // Telescoped density floor (skipped when a fallback step interrupted
    // the accounting).
    bool any_fallback = false;
    for (const auto& s : trace.steps)
        any_fallback |= s.case_taken == StepCase::FallbackRemoval;
    if (any_fallback != trace.had_fallback) return false;
    if (!trace.had_fallback &&
        trace.final_density < floor_factor(trace.profile) * trace.input_density)
        return false;

    return true;
}

} // namespace minorlab
