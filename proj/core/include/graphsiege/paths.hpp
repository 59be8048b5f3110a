#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "graphsiege/graph.hpp"

namespace graphsiege {

using Hops = std::uint32_t;
inline constexpr Hops kUnreachable = std::numeric_limits<Hops>::max();

/// Symmetric hop-count matrix over all vertex ids; pairs in different
/// components (and pairs touching a removed vertex) carry kUnreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {
    for (std::size_t v = 0; v < n; ++v) d_[v * n + v] = 0;
  }

  std::size_t size() const { return n_; }
  Hops at(VertexId u, VertexId v) const { return d_[u * n_ + v]; }
  bool reachable(VertexId u, VertexId v) const { return at(u, v) != kUnreachable; }
  void set(VertexId u, VertexId v, Hops d) { d_[u * n_ + v] = d_[v * n_ + u] = d; }

 private:
  std::size_t n_ = 0;
  std::vector<Hops> d_;
};

/// Hop distances from one source (kUnreachable where no path exists).
std::vector<Hops> bfs_distances(const Graph& g, VertexId source);

/// Per-source breadth-first search; the paper-grade O(n^3) relaxation
/// route lives in the test oracles.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Mean hop distance over unordered pairs with a finite distance.
/// Throws NoFinitePairsError when every pair is unreachable.
double apl_constrained(const Graph& g);

/// Average inverse path length over ordered pairs, 1/infinity counting
/// as 0. Always in [0,1]; 0- and 1-vertex graphs yield 0.
double aipl(const Graph& g);

std::optional<Hops> eccentricity(const Graph& g, VertexId v);
std::optional<Hops> diameter(const Graph& g);
std::optional<Hops> radius(const Graph& g);
/// Maximal eccentricity over all vertices; identical to the diameter.
std::optional<Hops> graph_eccentricity(const Graph& g);

std::size_t triangles_at(const Graph& g, VertexId v);
/// 2*triangles / (k*(k-1)); 0 by convention for degree < 2.
double clustering_coefficient(const Graph& g, VertexId v);
double mean_clustering(const Graph& g);

/// 2m / (n*(n-1)) over alive vertices; requires n >= 2.
double density(const Graph& g);

struct MetricReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  double apl_constrained = 0;          // NaN when no finite pair exists
  double aipl = 0;
  std::optional<Hops> diameter;
  std::optional<Hops> radius;
  double mean_clustering = 0;
  double density = 0;                  // 0 when fewer than 2 vertices
};

MetricReport metric_report(const Graph& g);

}  // namespace graphsiege
