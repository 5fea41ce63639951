#pragma once

#include "minorlab/graph.hpp"

#include <iosfwd>
#include <string>

namespace minorlab {

/// Edge-list text format: optional header line "p <n> <m>", then one
/// 0-indexed "u v" pair per line. Loops and duplicate edges are rejected.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: header plus edges sorted lexicographically.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

} // namespace minorlab
