#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vtcrit/graph.hpp"

namespace vtcrit {

// graph6: n as chr(63+n) for n <= 62 (or '~' + 18-bit form above that),
// then the upper triangle in column-major order, 6 bits per character,
// each offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);
std::vector<Graph> read_graph6_file(const std::string& path);

// Plain text: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace vtcrit
