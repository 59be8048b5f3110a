#pragma once

#include <iosfwd>
#include <string>

#include "graphsiege/graph.hpp"

namespace graphsiege {

/// Text format: first line "n m", then m lines "u v" (0-based). Lines
/// starting with '#' are ignored. Output is canonical (u < v, sorted);
/// input accepts either endpoint order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace graphsiege
