#include "minorlab/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minorlab {

Graph read_edge_list(std::istream& in) {
    std::string line;
    bool have_header = false;
    std::uint64_t header_n = 0, header_m = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t max_id = 0;
    bool any_vertex = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (first == "p") {
            if (have_header || !edges.empty())
                throw std::invalid_argument("edge list: misplaced header");
            if (!(ls >> header_n >> header_m))
                throw std::invalid_argument("edge list: malformed header");
            have_header = true;
            continue;
        }
        std::uint64_t u = 0, v = 0;
        try {
            u = std::stoull(first);
        } catch (...) {
            throw std::invalid_argument("edge list: bad token at line " + std::to_string(lineno));
        }
        if (!(ls >> v))
            throw std::invalid_argument("edge list: missing endpoint at line " + std::to_string(lineno));
        if (u > UINT32_MAX || v > UINT32_MAX)
            throw std::invalid_argument("edge list: vertex id too large");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        max_id = std::max({max_id, static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
        any_vertex = true;
    }
    std::uint32_t n = any_vertex ? max_id + 1 : 0;
    if (have_header) {
        if (any_vertex && header_n < max_id + 1)
            throw std::invalid_argument("edge list: header n smaller than max vertex id + 1");
        if (header_m != edges.size())
            throw std::invalid_argument("edge list: header m does not match edge count");
        n = static_cast<std::uint32_t>(header_n);
    }
    return Graph(n, edges); // Graph constructor rejects loops and duplicates
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p " << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_edge_list(out, g);
}

} // namespace minorlab
