#include "graphsiege/edge_list.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace graphsiege {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw Error("edge list: missing header line");
  std::size_t n = 0, m = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> n >> m)) throw Error("edge list: bad header '" + line + "'");
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!next_data_line(in, line))
      throw Error("edge list: expected " + std::to_string(m) + " edges, got " +
                  std::to_string(i));
    std::istringstream row(line);
    VertexId u = 0, v = 0;
    if (!(row >> u >> v)) throw Error("edge list: bad edge line '" + line + "'");
    edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
}

}  // namespace graphsiege
