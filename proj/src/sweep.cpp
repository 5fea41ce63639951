#include "minorlab/sweep.hpp"

#include "minorlab/dyadic.hpp"
#include "minorlab/rng.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace minorlab {

namespace {

// Fixed-precision, locale-free double formatting keeps the CSV byte-stable.
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg, std::ostream& csv) {
    if (cfg.ns.empty() || cfg.trials == 0) throw std::invalid_argument("empty sweep");
    csv << "model,n,trial,subseed,gen_attempts,gen_param,girth_target,density,"
           "extract_steps,extract_outcome,final_m,final_density,regime,success,"
           "minor_order,order_over_log,order_over_loglog";
    if (cfg.timings) csv << ",elapsed_ms";
    csv << "\n";

    SweepReport report;
    for (std::uint64_t n : cfg.ns) {
        SweepAggregate agg;
        agg.n = n;
        agg.trials = cfg.trials;
        const double lg = std::log2(static_cast<double>(n));
        const double llg = std::log2(lg);
        std::uint64_t girth_target = cfg.gen_param;
        if (cfg.model == GenModel::HighGirth && cfg.girth_from_n)
            girth_target = static_cast<std::uint64_t>(std::ceil(lg / 2.0));

        for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
            const auto t0 = std::chrono::steady_clock::now();
            const std::uint64_t subseed = derive_subseed(cfg.seed, n, trial);

            GenSpec spec;
            spec.model = cfg.model;
            spec.n = n;
            spec.param = cfg.model == GenModel::HighGirth ? girth_target : cfg.gen_param;
            spec.param2 = cfg.gen_param2;

            Graph g;
            std::uint64_t attempts = 0;
            while (true) {
                spec.seed = derive_subseed(subseed, 0x67656eULL, attempts);
                g = gen(spec);
                ++attempts;
                if (!cfg.min_density || g.order() == 0) break;
                if (g.average_degree() >= *cfg.min_density) break;
                if (attempts >= cfg.max_gen_attempts)
                    throw std::runtime_error("sweep: conditioning failed to converge");
            }
            const Rational density = g.average_degree();

            FindMinorConfig fcfg = cfg.find;
            fcfg.pipeline.rng_seed = derive_subseed(subseed, 0x657874ULL);

            bool success = false;
            std::uint64_t order = 0;
            std::string regime = "-";
            std::string outcome = "-";
            std::uint64_t steps = 0;
            std::uint64_t final_m = 0;
            std::string final_density = "-";
            if (density >= cfg.c_of_t + cfg.epsilon) {
                const auto rep = find_small_minor(g, cfg.t, cfg.epsilon, cfg.c_of_t, fcfg);
                success = rep.model.has_value();
                order = rep.order;
                regime = rep.regime;
                outcome = outcome_name(rep.extraction_outcome);
                steps = rep.extraction_steps;
                final_m = rep.expander_order;
                final_density = rational_to_string(rep.expander_density);
            } else {
                regime = "precondition_failed";
            }

            const double r1 = success ? static_cast<double>(order) / lg : 0.0;
            const double r2 = success ? static_cast<double>(order) / (lg * llg) : 0.0;
            if (success) {
                ++agg.successes;
                agg.max_order = std::max(agg.max_order, order);
                agg.max_ratio_log = std::max(agg.max_ratio_log, r1);
                agg.max_ratio_loglog = std::max(agg.max_ratio_loglog, r2);
                if (cfg.model == GenModel::HighGirth && order < girth_target)
                    agg.min_model_order_girth_ok = 0;
            }

            csv << gen_model_name(cfg.model) << "," << n << "," << trial << "," << subseed
                << "," << attempts << "," << cfg.gen_param << "," << girth_target << ","
                << rational_to_string(density) << "," << steps << "," << outcome << ","
                << final_m << "," << final_density << "," << regime << ","
                << (success ? 1 : 0) << "," << order << "," << format_double(r1) << ","
                << format_double(r2);
            if (cfg.timings) {
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count();
                csv << "," << ms;
            }
            csv << "\n";
        }

        csv << gen_model_name(cfg.model) << "," << n << ",aggregate,,,,,,,,,,,"
            << agg.successes << "," << agg.max_order << ","
            << format_double(agg.max_ratio_log) << "," << format_double(agg.max_ratio_loglog);
        if (cfg.timings) csv << ",";
        csv << "\n";
        report.per_n.push_back(agg);
    }
    return report;
}

} // namespace minorlab
