#include "minorlab/extraction.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <stdexcept>

namespace minorlab {

namespace {

const char* case_name(StepCase c) {
    switch (c) {
        case StepCase::Case1Removal: return "case1_removal";
        case StepCase::Case2Restriction: return "case2_restriction";
        case StepCase::FallbackRemoval: return "fallback_removal";
    }
    return "?";
}

StepCase case_from_name(const std::string& s) {
    if (s == "case1_removal") return StepCase::Case1Removal;
    if (s == "case2_restriction") return StepCase::Case2Restriction;
    if (s == "fallback_removal") return StepCase::FallbackRemoval;
    throw std::invalid_argument("unknown step case: " + s);
}

ExtractionOutcome outcome_from_name(const std::string& s) {
    if (s == "expander_certified") return ExtractionOutcome::ExpanderCertified;
    if (s == "heuristic_no_violation") return ExtractionOutcome::HeuristicNoViolationFound;
    if (s == "small_graph_stop") return ExtractionOutcome::SmallGraphStop;
    if (s == "component_fallback") return ExtractionOutcome::ComponentFallback;
    throw std::invalid_argument("unknown outcome: " + s);
}

} // namespace

nlohmann::json trace_to_json(const ExtractionTrace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps) {
        steps.push_back({
            {"iteration", s.iteration},
            {"order_before", s.order_before},
            {"order_after", s.order_after},
            {"density_before", rational_to_string(s.density_before)},
            {"density_after", rational_to_string(s.density_after)},
            {"case", case_name(s.case_taken)},
            {"scale", s.violation.scale},
            {"witness", s.violation.witness.members()},
            {"observed", rational_to_string(s.violation.observed_ratio)},
            {"required_upper", rational_to_string(s.violation.required_upper)},
            {"kept", s.kept},
        });
    }
    nlohmann::json tallies = nlohmann::json::array();
    for (const auto& tl : t.tallies) {
        nlohmann::json by_scale = nlohmann::json::object();
        for (const auto& [d, a] : tl.case2_by_scale) by_scale[std::to_string(d)] = a;
        tallies.push_back({{"interval", tl.interval}, {"case2_by_scale", by_scale}});
    }
    return nlohmann::json{
        {"schema", "minorlab.trace/1"},
        {"input_order", t.input_order},
        {"input_edges", t.input_edges},
        {"input_density", rational_to_string(t.input_density)},
        {"profile", profile_to_json(t.profile)},
        {"stop_order", t.stop_order},
        {"exact_cap", t.exact_cap},
        {"finder", t.finder},
        {"steps", steps},
        {"outcome", outcome_name(t.outcome)},
        {"final_vertices", t.final_vertices},
        {"final_density", rational_to_string(t.final_density)},
        {"tallies", tallies},
        {"had_fallback", t.had_fallback},
        {"finder_probes", t.finder_probes},
    };
}

ExtractionTrace trace_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != "minorlab.trace/1")
        throw std::invalid_argument("unsupported trace schema");
    ExtractionTrace t;
    t.input_order = j.at("input_order").get<std::uint64_t>();
    t.input_edges = j.at("input_edges").get<std::uint64_t>();
    t.input_density = parse_rational(j.at("input_density").get<std::string>());
    t.profile = profile_from_json(j.at("profile"));
    t.stop_order = j.at("stop_order").get<std::uint64_t>();
    t.exact_cap = j.at("exact_cap").get<std::uint64_t>();
    t.finder = j.at("finder").get<std::string>();
    for (const auto& sj : j.at("steps")) {
        ExtractionStep s;
        s.iteration = sj.at("iteration").get<std::uint64_t>();
        s.order_before = sj.at("order_before").get<std::uint64_t>();
        s.order_after = sj.at("order_after").get<std::uint64_t>();
        s.density_before = parse_rational(sj.at("density_before").get<std::string>());
        s.density_after = parse_rational(sj.at("density_after").get<std::string>());
        s.case_taken = case_from_name(sj.at("case").get<std::string>());
        s.violation.scale = sj.at("scale").get<int>();
        s.violation.witness = VertexSet(sj.at("witness").get<std::vector<std::uint32_t>>());
        s.violation.observed_ratio = parse_rational(sj.at("observed").get<std::string>());
        s.violation.required_upper = parse_rational(sj.at("required_upper").get<std::string>());
        s.kept = sj.at("kept").get<std::vector<std::uint32_t>>();
        t.steps.push_back(std::move(s));
    }
    t.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    t.final_vertices = j.at("final_vertices").get<std::vector<std::uint32_t>>();
    t.final_density = parse_rational(j.at("final_density").get<std::string>());
    for (const auto& tj : j.at("tallies")) {
        IntervalTally tl;
        tl.interval = tj.at("interval").get<int>();
        for (const auto& [key, val] : tj.at("case2_by_scale").items())
            tl.case2_by_scale[std::stoi(key)] = val.get<std::uint64_t>();
        t.tallies.push_back(std::move(tl));
    }
    t.had_fallback = j.at("had_fallback").get<bool>();
    t.finder_probes = j.at("finder_probes").get<std::uint64_t>();
    return t;
}

namespace {

constexpr char kMagic[4] = {'M', 'L', 'T', 'R'};
constexpr std::uint32_t kVersion = 1;

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) throw std::runtime_error("truncated trace");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(buf[i]) << (8 * i);
    return v;
}

void put_bigint(std::ostream& out, const BigInt& v) {
    const bool neg = v < 0;
    BigInt a = neg ? -v : v;
    std::vector<unsigned char> bytes;
    export_bits(a, std::back_inserter(bytes), 8);
    put_u64(out, (bytes.size() << 1) | (neg ? 1 : 0));
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

BigInt get_bigint(std::istream& in) {
    const std::uint64_t header = get_u64(in);
    const bool neg = header & 1;
    std::vector<unsigned char> bytes(header >> 1);
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!in) throw std::runtime_error("truncated trace");
    BigInt a = 0;
    if (!bytes.empty()) import_bits(a, bytes.begin(), bytes.end(), 8);
    return neg ? -a : a;
}

void put_rational(std::ostream& out, const Rational& r) {
    put_bigint(out, numerator(r));
    put_bigint(out, denominator(r));
}

Rational get_rational(std::istream& in) {
    BigInt num = get_bigint(in);
    BigInt den = get_bigint(in);
    if (den == 0) throw std::runtime_error("corrupt rational");
    return Rational(num, den);
}

void put_u32_list(std::ostream& out, const std::vector<std::uint32_t>& v) {
    put_u64(out, v.size());
    for (std::uint32_t x : v) put_u64(out, x);
}

std::vector<std::uint32_t> get_u32_list(std::istream& in) {
    const std::uint64_t n = get_u64(in);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(get_u64(in));
    return v;
}

void put_string(std::ostream& out, const std::string& s) {
    put_u64(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
    const std::uint64_t n = get_u64(in);
    std::string s(n, '\0');
    in.read(s.data(), static_cast<std::streamsize>(n));
    if (!in) throw std::runtime_error("truncated trace");
    return s;
}

} // namespace

void write_trace_binary(std::ostream& out, const ExtractionTrace& t) {
    out.write(kMagic, 4);
    put_u64(out, kVersion);
    put_u64(out, t.input_order);
    put_u64(out, t.input_edges);
    put_rational(out, t.input_density);
    put_u64(out, t.profile.kind == ProfileKind::DeltaExpander ? 0 : 1);
    put_rational(out, t.profile.delta);
    put_u64(out, t.profile.ambient_n);
    put_u64(out, t.stop_order);
    put_u64(out, t.exact_cap);
    put_string(out, t.finder);
    put_u64(out, t.steps.size());
    for (const auto& s : t.steps) {
        put_u64(out, s.iteration);
        put_u64(out, s.order_before);
        put_u64(out, s.order_after);
        put_rational(out, s.density_before);
        put_rational(out, s.density_after);
        put_u64(out, static_cast<std::uint64_t>(s.case_taken));
        put_u64(out, static_cast<std::uint64_t>(s.violation.scale));
        put_u32_list(out, s.violation.witness.members());
        put_rational(out, s.violation.observed_ratio);
        put_rational(out, s.violation.required_upper);
        put_u32_list(out, s.kept);
    }
    put_u64(out, static_cast<std::uint64_t>(t.outcome));
    put_u32_list(out, t.final_vertices);
    put_rational(out, t.final_density);
    put_u64(out, t.tallies.size());
    for (const auto& tl : t.tallies) {
        put_u64(out, static_cast<std::uint64_t>(tl.interval));
        put_u64(out, tl.case2_by_scale.size());
        for (const auto& [d, a] : tl.case2_by_scale) {
            put_u64(out, static_cast<std::uint64_t>(d));
            put_u64(out, a);
        }
    }
    put_u64(out, t.had_fallback ? 1 : 0);
    put_u64(out, t.finder_probes);
}

ExtractionTrace read_trace_binary(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != std::string(kMagic, 4))
        throw std::runtime_error("not a minorlab trace");
    if (get_u64(in) != kVersion) throw std::runtime_error("unsupported trace version");
    ExtractionTrace t;
    t.input_order = get_u64(in);
    t.input_edges = get_u64(in);
    t.input_density = get_rational(in);
    const std::uint64_t kind = get_u64(in);
    t.profile.kind = kind == 0 ? ProfileKind::DeltaExpander : ProfileKind::DeltaNExpander;
    t.profile.delta = get_rational(in);
    t.profile.ambient_n = get_u64(in);
    t.stop_order = get_u64(in);
    t.exact_cap = get_u64(in);
    t.finder = get_string(in);
    const std::uint64_t nsteps = get_u64(in);
    for (std::uint64_t i = 0; i < nsteps; ++i) {
        ExtractionStep s;
        s.iteration = get_u64(in);
        s.order_before = get_u64(in);
        s.order_after = get_u64(in);
        s.density_before = get_rational(in);
        s.density_after = get_rational(in);
        s.case_taken = static_cast<StepCase>(get_u64(in));
        s.violation.scale = static_cast<int>(get_u64(in));
        s.violation.witness = VertexSet(get_u32_list(in));
        s.violation.observed_ratio = get_rational(in);
        s.violation.required_upper = get_rational(in);
        s.kept = get_u32_list(in);
        t.steps.push_back(std::move(s));
    }
    t.outcome = static_cast<ExtractionOutcome>(get_u64(in));
    t.final_vertices = get_u32_list(in);
    t.final_density = get_rational(in);
    const std::uint64_t ntallies = get_u64(in);
    for (std::uint64_t i = 0; i < ntallies; ++i) {
        IntervalTally tl;
        tl.interval = static_cast<int>(get_u64(in));
        const std::uint64_t entries = get_u64(in);
        for (std::uint64_t e = 0; e < entries; ++e) {
            const int d = static_cast<int>(get_u64(in));
            tl.case2_by_scale[d] = get_u64(in);
        }
        t.tallies.push_back(std::move(tl));
    }
    t.had_fallback = get_u64(in) != 0;
    t.finder_probes = get_u64(in);
    return t;
}

} // namespace minorlab
