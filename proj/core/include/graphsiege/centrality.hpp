#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphsiege/graph.hpp"
#include "graphsiege/rng.hpp"

namespace graphsiege {

/// An attackable graph component: a vertex (u == v) or an edge (u < v).
struct ComponentId {
  VertexId u;
  VertexId v;

  static ComponentId vertex(VertexId id) { return {id, id}; }
  static ComponentId edge(const EdgeId& e) { return {e.first, e.second}; }

  bool is_vertex() const { return u == v; }
  EdgeId as_edge() const { return EdgeId(u, v); }

  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

std::string to_string(const ComponentId& id);

enum class TableKind { Vertex, Edge };

/// Betweenness scores for every vertex or every edge of a graph,
/// sorted by id. Raw values count shortest-path fractions over unordered
/// pairs; normalized values are raw divided by the pair count so they can
/// be compared across graphs of different sizes.
struct BetweennessTable {
  TableKind kind = TableKind::Vertex;
  std::vector<ComponentId> ids;
  std::vector<double> raw;
  std::vector<double> normalized;

  std::size_t size() const { return ids.size(); }
};

/// Fraction of shortest s-t paths through each vertex, summed over
/// unordered pairs with both endpoints distinct from the vertex.
/// Normalization constant: (n-1)(n-2)/2 with n the alive vertex count.
BetweennessTable vertex_betweenness(const Graph& g);

/// Fraction of shortest s-t paths through each edge, summed over
/// unordered pairs; the pair (s,t) itself counts toward edge (s,t).
/// Normalization constant: n(n-1)/2.
BetweennessTable edge_betweenness(const Graph& g);

enum class SelectMode { Low, Median, High, Random };

/// Id achieving the minimal / lower-median / maximal raw value, ties broken
/// uniformly at random; Random ignores the values entirely.
ComponentId extremal(const BetweennessTable& table, SelectMode mode, Rng& rng);

}  // namespace graphsiege
