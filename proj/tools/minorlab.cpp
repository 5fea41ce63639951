// minorlab: expander extraction and small-minor search toolkit CLI.
//
// Exit codes: 0 success, 1 usage/input error, 2 verification failure or
// negative verdict.

#include "minorlab/edgelist.hpp"
#include "minorlab/expansion.hpp"
#include "minorlab/extraction.hpp"
#include "minorlab/generate.hpp"
#include "minorlab/minor_finder.hpp"
#include "minorlab/oracle.hpp"
#include "minorlab/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace minorlab;

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << content;
}

ExpansionProfile make_profile(const std::string& kind, const std::string& delta,
                              std::uint64_t ambient_n, std::uint64_t graph_order) {
    const Rational d = parse_rational(delta);
    if (kind == "delta") return ExpansionProfile::delta_expander(d);
    if (kind == "delta-n")
        return ExpansionProfile::delta_n_expander(d, ambient_n ? ambient_n : graph_order);
    throw std::invalid_argument("profile must be 'delta' or 'delta-n'");
}

Rational default_c_of_t(std::uint32_t t, const std::string& ct) {
    if (!ct.empty()) return parse_rational(ct);
    // textbook extremal densities, used as configuration defaults only
    switch (t) {
        case 3: return Rational(1);
        case 4: return Rational(2);
        case 5: return Rational(3);
        default:
            throw std::invalid_argument("no default c(t) for t=" + std::to_string(t) +
                                        "; pass --ct");
    }
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    if (out.empty()) throw std::invalid_argument("empty n list");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph expander extraction and small K_t-minor search"};
    app.require_subcommand(1);

    std::string input, out_path, format = "json";
    std::uint64_t seed = 0;

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
    std::string gen_model = "gnp";
    std::uint64_t gen_n = 0, gen_param = 8, gen_param2 = 3;
    gen_cmd->add_option("--model", gen_model, "gnp|high-girth|cliques|regular");
    gen_cmd->add_option("--n", gen_n, "number of vertices")->required();
    gen_cmd->add_option("--param", gen_param,
                        "c for gnp (p=c/n), girth target, clique order, or degree")
        ->required();
    gen_cmd->add_option("--param2", gen_param2, "high-girth base density numerator c");
    gen_cmd->add_option("--seed", seed, "rng seed");
    gen_cmd->add_option("--out", out_path, "output file (default stdout)");

    // check
    auto* check_cmd = app.add_subcommand("check", "certify expansion or find a violation");
    std::string profile_kind = "delta", delta_text = "1/256";
    std::uint64_t ambient_n = 0, exact_cap = 20, probe_cap = 2048;
    check_cmd->add_option("--input", input, "edge list file")->required();
    check_cmd->add_option("--profile", profile_kind, "delta|delta-n");
    check_cmd->add_option("--delta", delta_text, "delta as p/q");
    check_cmd->add_option("--ambient-n", ambient_n, "ambient n for delta-n (default |V|)");
    check_cmd->add_option("--exact-cap", exact_cap, "max order for exact enumeration");
    check_cmd->add_option("--probe-cap", probe_cap, "heuristic start-vertex cap");
    check_cmd->add_option("--seed", seed, "rng seed");
    check_cmd->add_option("--out", out_path, "output file");

    // extract
    auto* extract_cmd = app.add_subcommand("extract", "extract a dense expander subgraph");
    std::string trace_path, binary_trace_path, expander_out;
    extract_cmd->add_option("--input", input, "edge list file")->required();
    extract_cmd->add_option("--profile", profile_kind, "delta|delta-n");
    extract_cmd->add_option("--delta", delta_text, "delta as p/q");
    extract_cmd->add_option("--ambient-n", ambient_n, "ambient n for delta-n (default |V|)");
    extract_cmd->add_option("--exact-cap", exact_cap, "max order for exact enumeration");
    extract_cmd->add_option("--probe-cap", probe_cap, "heuristic start-vertex cap");
    extract_cmd->add_option("--seed", seed, "rng seed");
    extract_cmd->add_option("--trace", trace_path, "write the JSON trace here");
    extract_cmd->add_option("--binary-trace", binary_trace_path, "write a binary trace here");
    extract_cmd->add_option("--expander-out", expander_out, "write the expander edge list here");
    extract_cmd->add_option("--out", out_path, "summary output file");

    // find-minor
    auto* find_cmd = app.add_subcommand("find-minor", "search for a small K_t minor");
    std::uint32_t t = 4;
    std::string epsilon_text = "1", ct_text;
    std::uint64_t brute_cap = 12;
    bool paper_params = false;
    find_cmd->add_option("--input", input, "edge list file")->required();
    find_cmd->add_option("--t", t, "clique minor order")->required();
    find_cmd->add_option("--epsilon", epsilon_text, "density slack, p/q");
    find_cmd->add_option("--ct", ct_text, "c(t), p/q (defaults shipped for t=3,4,5)");
    find_cmd->add_option("--brute-cap", brute_cap, "brute-force cap for small expanders");
    find_cmd->add_flag("--paper-params", paper_params,
                       "use the asymptotic thresholds instead of desk-scale ones");
    find_cmd->add_option("--seed", seed, "rng seed");
    find_cmd->add_option("--out", out_path, "output file");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minor search (small graphs)");
    oracle_cmd->add_option("--input", input, "edge list file")->required();
    oracle_cmd->add_option("--t", t, "clique minor order")->required();
    oracle_cmd->add_option("--brute-cap", brute_cap, "order cap");
    oracle_cmd->add_option("--out", out_path, "output file");

    // verify-trace
    auto* verify_cmd = app.add_subcommand("verify-trace", "replay a trace against its input");
    std::string trace_in;
    verify_cmd->add_option("--input", input, "edge list file")->required();
    verify_cmd->add_option("--trace", trace_in, "JSON trace file")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run the scaling experiment");
    std::string ns_text = "256,512,1024,2048,4096,8192";
    std::uint64_t trials = 8;
    std::string min_density_text;
    bool timings = false, girth_from_n = false;
    sweep_cmd->add_option("--model", gen_model, "gnp|high-girth|cliques|regular");
    sweep_cmd->add_option("--n", ns_text, "comma-separated vertex counts");
    sweep_cmd->add_option("--param", gen_param, "generator parameter");
    sweep_cmd->add_option("--param2", gen_param2, "high-girth base density numerator");
    sweep_cmd->add_flag("--girth-from-n", girth_from_n, "high-girth: target ceil(log2(n)/2)");
    sweep_cmd->add_option("--t", t, "clique minor order");
    sweep_cmd->add_option("--epsilon", epsilon_text, "density slack, p/q");
    sweep_cmd->add_option("--ct", ct_text, "c(t), p/q");
    sweep_cmd->add_option("--trials", trials, "trials per n");
    sweep_cmd->add_option("--seed", seed, "rng seed");
    sweep_cmd->add_option("--min-density", min_density_text, "resample until d(G) >= this");
    sweep_cmd->add_flag("--timings", timings, "append elapsed-ms column (non-deterministic)");
    sweep_cmd->add_option("--brute-cap", brute_cap, "brute-force cap");
    sweep_cmd->add_option("--out", out_path, "CSV output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen_cmd->parsed()) {
            GenSpec spec{gen_model_from_name(gen_model), gen_n, gen_param, gen_param2, seed};
            const Graph g = gen(spec);
            std::ostringstream os;
            write_edge_list(os, g);
            write_output(out_path, os.str());
            return 0;
        }

        if (check_cmd->parsed()) {
            const Graph g = read_edge_list_file(input);
            const auto profile = make_profile(profile_kind, delta_text, ambient_n, g.order());
            nlohmann::json j;
            if (g.order() <= exact_cap) {
                const CheckResult r = check_expander_exact(g, profile, exact_cap);
                j = check_result_to_json(r, profile, g.order());
            } else {
                const auto v = find_violation_heuristic(g, profile, {probe_cap, seed});
                if (v) {
                    j = violation_to_json(*v, profile, g.order());
                } else {
                    ExpanderCertificate cert;
                    cert.mode = ExpanderCertificate::Mode::HeuristicNoViolationFound;
                    cert.kind = profile.kind;
                    cert.delta = profile.delta;
                    cert.ambient_n = profile.ambient_n;
                    cert.graph_order = g.order();
                    j = certificate_to_json(cert);
                }
            }
            write_output(out_path, j.dump(2) + "\n");
            return j.at("mode") == "violation" ? 2 : 0;
        }

        if (extract_cmd->parsed()) {
            const Graph g = read_edge_list_file(input);
            const auto profile = make_profile(profile_kind, delta_text, ambient_n, g.order());
            PipelineConfig cfg;
            cfg.exact_cap = exact_cap;
            cfg.probe_cap = probe_cap;
            cfg.rng_seed = seed;
            const auto result = extract_expander(g, profile, cfg);
            if (!trace_path.empty()) {
                std::ofstream tf(trace_path);
                if (!tf) throw std::runtime_error("cannot open " + trace_path);
                tf << trace_to_json(result.trace).dump(2) << "\n";
            }
            if (!binary_trace_path.empty()) {
                std::ofstream tf(binary_trace_path, std::ios::binary);
                if (!tf) throw std::runtime_error("cannot open " + binary_trace_path);
                write_trace_binary(tf, result.trace);
            }
            if (!expander_out.empty()) write_edge_list_file(expander_out, result.expander);
            nlohmann::json j{
                {"input_order", result.trace.input_order},
                {"input_density", rational_to_string(result.trace.input_density)},
                {"steps", result.trace.steps.size()},
                {"outcome", outcome_name(result.trace.outcome)},
                {"final_order", result.expander.order()},
                {"final_density", rational_to_string(result.trace.final_density)},
            };
            write_output(out_path, j.dump(2) + "\n");
            return verify_extraction_trace(g, result.trace) ? 0 : 2;
        }

        if (find_cmd->parsed()) {
            const Graph g = read_edge_list_file(input);
            FindMinorConfig cfg;
            cfg.brute_cap = brute_cap;
            cfg.desk_params = !paper_params;
            cfg.pipeline.rng_seed = seed;
            const auto rep = find_small_minor(g, t, parse_rational(epsilon_text),
                                              default_c_of_t(t, ct_text), cfg);
            nlohmann::json j{
                {"regime", rep.regime},
                {"params", rep.params_flavor},
                {"delta", rational_to_string(rep.delta)},
                {"out_of_regime_delta", rep.out_of_regime_delta},
                {"input_density", rational_to_string(rep.input_density)},
                {"expander_order", rep.expander_order},
                {"expander_density", rational_to_string(rep.expander_density)},
                {"extraction_outcome", outcome_name(rep.extraction_outcome)},
                {"extraction_steps", rep.extraction_steps},
            };
            if (rep.model) {
                j["model"] = minor_model_to_json(*rep.model);
                j["order"] = rep.order;
                j["order_bound_ratio"] = rep.order_bound_ratio;
            } else {
                j["failure"] = rep.failure.reason;
            }
            write_output(out_path, j.dump(2) + "\n");
            return rep.model ? 0 : 2;
        }

        if (oracle_cmd->parsed()) {
            const Graph g = read_edge_list_file(input);
            const auto model = brute_force_minor(g, t, brute_cap);
            if (!model) {
                write_output(out_path, "none\n");
                return 2;
            }
            write_output(out_path, minor_model_to_json(*model).dump(2) + "\n");
            return 0;
        }

        if (verify_cmd->parsed()) {
            const Graph g = read_edge_list_file(input);
            std::ifstream tf(trace_in);
            if (!tf) throw std::runtime_error("cannot open " + trace_in);
            nlohmann::json j;
            tf >> j;
            const bool ok = verify_extraction_trace(g, trace_from_json(j));
            std::cout << (ok ? "trace ok\n" : "trace INVALID\n");
            return ok ? 0 : 2;
        }

        if (sweep_cmd->parsed()) {
            SweepConfig cfg;
            cfg.model = gen_model_from_name(gen_model);
            cfg.ns = parse_n_list(ns_text);
            cfg.gen_param = gen_param;
            cfg.gen_param2 = gen_param2;
            cfg.girth_from_n = girth_from_n;
            cfg.t = t;
            cfg.epsilon = parse_rational(epsilon_text);
            cfg.c_of_t = default_c_of_t(t, ct_text);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.timings = timings;
            cfg.find.brute_cap = brute_cap;
            if (!min_density_text.empty()) cfg.min_density = parse_rational(min_density_text);
            std::ostringstream os;
            run_sweep(cfg, os);
            write_output(out_path, os.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
