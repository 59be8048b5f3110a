#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "graphsiege/errors.hpp"

namespace graphsiege {

using VertexId = std::uint32_t;

/// Canonical undirected edge id: first < second always.
struct EdgeId {
  VertexId first;
  VertexId second;

  EdgeId(VertexId u, VertexId v) : first(u < v ? u : v), second(u < v ? v : u) {
    if (u == v) throw SelfLoopError(u);
  }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Undirected simple unweighted graph, possibly disconnected.
///
/// Vertex removal is logical: ids stay stable for the whole lifetime of the
/// graph so that attack traces can name vertices consistently, and removed
/// vertices are skipped by every metric. Adjacency lists are kept sorted,
/// which makes edge lookup O(log degree) and all outputs canonical.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices.
  explicit Graph(std::size_t n) : adjacency_(n), alive_(n, 1), alive_count_(n) {}

  static Graph from_edge_list(std::size_t n,
                              const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  std::size_t edge_count() const { return edge_count_; }

  bool alive(VertexId v) const { return v < alive_.size() && alive_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }

  bool has_edge(VertexId u, VertexId v) const;

  std::vector<VertexId> alive_vertices() const;

  /// All alive edges, canonical (u < v), sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  void add_edge(VertexId u, VertexId v);

  /// Logically deletes v together with every incident edge.
  void remove_vertex(VertexId v);

  void remove_edge(const EdgeId& e);

  /// Connected components of the alive subgraph, ordered by
  /// (size desc, smallest member asc); members sorted ascending.
  std::vector<std::vector<VertexId>> components() const;

  bool is_connected() const;

 private:
  void check_in_range(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  std::size_t edge_count_ = 0;
};

}  // namespace graphsiege
