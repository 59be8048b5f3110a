#include "graphsiege/paths.hpp"

#include <algorithm>
#include <cmath>

namespace graphsiege {

std::vector<Hops> bfs_distances(const Graph& g, VertexId source) {
  std::vector<Hops> dist(g.vertex_count(), kUnreachable);
  if (!g.alive(source)) return dist;
  dist[source] = 0;
  std::vector<VertexId> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.vertex_count());
  for (VertexId u : g.alive_vertices()) {
    auto row = bfs_distances(g, u);
    for (VertexId v = 0; v < row.size(); ++v)
      if (v > u && row[v] != kUnreachable) d.set(u, v, row[v]);
  }
  return d;
}

double apl_constrained(const Graph& g) {
  double sum = 0;
  std::size_t finite_pairs = 0;
  for (VertexId u : g.alive_vertices()) {
    auto row = bfs_distances(g, u);
    for (VertexId v = u + 1; v < row.size(); ++v) {
      if (g.alive(v) && row[v] != kUnreachable) {
        sum += row[v];
        ++finite_pairs;
      }
    }
  }
  if (finite_pairs == 0) throw NoFinitePairsError();
  return sum / static_cast<double>(finite_pairs);
}

double aipl(const Graph& g) {
  const std::size_t n = g.alive_count();
  if (n <= 1) return 0.0;
  double sum = 0;  // over unordered pairs; ordered sum is twice this
  for (VertexId u : g.alive_vertices()) {
    auto row = bfs_distances(g, u);
    for (VertexId v = u + 1; v < row.size(); ++v)
      if (g.alive(v) && row[v] != kUnreachable) sum += 1.0 / row[v];
  }
  return 2.0 * sum / (static_cast<double>(n) * static_cast<double>(n - 1));
}

std::optional<Hops> eccentricity(const Graph& g, VertexId v) {
  if (!g.alive(v)) throw AlreadyRemovedError(v);
  auto row = bfs_distances(g, v);
  Hops ecc = 0;
  for (VertexId w : g.alive_vertices()) {
    if (row[w] == kUnreachable) return std::nullopt;
    ecc = std::max(ecc, row[w]);
  }
  return ecc;
}

std::optional<Hops> diameter(const Graph& g) {
  Hops best = 0;
  for (VertexId v : g.alive_vertices()) {
    auto ecc = eccentricity(g, v);
    if (!ecc) return std::nullopt;
    best = std::max(best, *ecc);
  }
  return best;
}

std::optional<Hops> radius(const Graph& g) {
  std::optional<Hops> best;
  for (VertexId v : g.alive_vertices()) {
    auto ecc = eccentricity(g, v);
    if (!ecc) return std::nullopt;
    if (!best || *ecc < *best) best = ecc;
  }
  return best ? best : std::optional<Hops>(0);
}

std::optional<Hops> graph_eccentricity(const Graph& g) { return diameter(g); }

std::size_t triangles_at(const Graph& g, VertexId v) {
  const auto& adj = g.neighbors(v);
  std::size_t count = 0;
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t k = i + 1; k < adj.size(); ++k)
      if (g.has_edge(adj[i], adj[k])) ++count;
  return count;
}

double clustering_coefficient(const Graph& g, VertexId v) {
  const std::size_t k = g.degree(v);
  if (k < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles_at(g, v)) /
         (static_cast<double>(k) * static_cast<double>(k - 1));
}

double mean_clustering(const Graph& g) {
  if (g.alive_count() == 0) return 0.0;
  double sum = 0;
  for (VertexId v : g.alive_vertices()) sum += clustering_coefficient(g, v);
  return sum / static_cast<double>(g.alive_count());
}

double density(const Graph& g) {
  const std::size_t n = g.alive_count();
  if (n < 2) throw TooSmallError("density needs at least 2 vertices");
  return 2.0 * static_cast<double>(g.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

MetricReport metric_report(const Graph& g) {
  MetricReport r;
  r.vertex_count = g.alive_count();
  r.edge_count = g.edge_count();
  try {
    r.apl_constrained = apl_constrained(g);
  } catch (const NoFinitePairsError&) {
    r.apl_constrained = std::numeric_limits<double>::quiet_NaN();
  }
  r.aipl = aipl(g);
  r.diameter = diameter(g);
  r.radius = radius(g);
  r.mean_clustering = mean_clustering(g);
  r.density = r.vertex_count < 2 ? 0.0 : density(g);
  return r;
}

}  // namespace graphsiege
