#pragma once

#include "gcover/gain_graph.hpp"
#include "gcover/graph.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <variant>

namespace gcover {

// Edge-list format:
//   graph <n>
//   edge <u> <v>
// '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

// Gain-file format:
//   gainfile 1
//   group cyclic <r> | group abelian <r1> <r2> ... | group perm <r>
//   vertices <n>
//   edge <u> <v> <g>            abelian; g is a comma list for products
//   edge <u> <v> perm <images>  permutation; one-line image list
// The gain on a line is f(u, v) for the orientation as written. The canonical
// writer emits one line per edge with u < v, in edge order.
GainGraph parse_gain_file(std::istream& in);
GainGraph parse_gain_file(const std::string& text);
std::string format_gain_file(const GainGraph& f);

using GraphInput = std::variant<Graph, GainGraph>;

/// Reads either format, dispatching on the first keyword.
GraphInput read_graph_input(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace gcover
