#include "graphsiege/generators.hpp"

#include <algorithm>
#include <set>

#include "graphsiege/rng.hpp"

namespace graphsiege {

namespace {

Graph er_gnp(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  if (p <= 0) return g;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (p >= 1.0 || rng.unit() < p) g.add_edge(u, v);
  return g;
}

Graph er_gnm(std::size_t n, std::size_t m, Rng& rng) {
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m > max_edges) throw BadSpecError("G(n,m): more edges than vertex pairs");
  Graph g(n);
  std::set<std::pair<VertexId, VertexId>> chosen;
  while (chosen.size() < m) {
    VertexId u = static_cast<VertexId>(rng.below(n));
    VertexId v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) g.add_edge(u, v);
  }
  return g;
}

Graph watts_strogatz(std::size_t n, std::size_t k, double rewire_p, Rng& rng) {
  if (k % 2 != 0 || k >= n) throw BadSpecError("Watts-Strogatz needs even k < n");
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (std::size_t i = 1; i <= k / 2; ++i)
      g.add_edge(u, static_cast<VertexId>((u + i) % n));
  if (rewire_p <= 0) return g;
  // rewire the far endpoint of each original lattice edge; re-draw on a
  // collision so the graph stays simple
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t i = 1; i <= k / 2; ++i) {
      VertexId v = static_cast<VertexId>((u + i) % n);
      if (rng.unit() >= rewire_p) continue;
      if (g.degree(u) >= n - 1) continue;  // u already adjacent to everyone
      VertexId w;
      do {
        w = static_cast<VertexId>(rng.below(n));
      } while (w == u || g.has_edge(u, w));
      g.remove_edge(EdgeId(u, v));
      g.add_edge(u, w);
    }
  }
  return g;
}

Graph barabasi_albert(std::size_t n, std::size_t m_attach, Rng& rng) {
  if (m_attach < 1 || m_attach >= n)
    throw BadSpecError("Barabasi-Albert needs 1 <= m_attach < n");
  Graph g(n);
  // seed clique keeps the graph connected from the start
  const std::size_t seed_size = m_attach + 1;
  std::vector<VertexId> endpoint_pool;  // one entry per incident edge end
  for (VertexId u = 0; u < seed_size; ++u)
    for (VertexId v = u + 1; v < seed_size; ++v) {
      g.add_edge(u, v);
      endpoint_pool.push_back(u);
      endpoint_pool.push_back(v);
    }
  std::vector<VertexId> targets;
  for (VertexId u = static_cast<VertexId>(seed_size); u < n; ++u) {
    targets.clear();
    while (targets.size() < m_attach) {
      VertexId t = endpoint_pool[rng.below(endpoint_pool.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end())
        targets.push_back(t);
    }
    for (VertexId t : targets) {
      g.add_edge(u, t);
      endpoint_pool.push_back(u);
      endpoint_pool.push_back(t);
    }
  }
  return g;
}

}  // namespace

Graph generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  switch (spec.family) {
    case Family::ErGnp:
      if (spec.p < 0 || spec.p > 1) throw BadSpecError("G(n,p) needs 0 <= p <= 1");
      return er_gnp(spec.n, spec.p, rng);
    case Family::ErGnm:
      return er_gnm(spec.n, spec.m_edges, rng);
    case Family::WattsStrogatz:
      if (spec.p < 0 || spec.p > 1)
        throw BadSpecError("rewiring probability outside [0, 1]");
      return watts_strogatz(spec.n, spec.k, spec.p, rng);
    case Family::BarabasiAlbert:
      return barabasi_albert(spec.n, spec.m_attach, rng);
  }
  throw BadSpecError("unknown family");
}

Graph connected_fragment(std::size_t size, double mean_degree, std::uint64_t seed) {
  if (size <= 1) return Graph(size);
  if (size == 2) return Graph::from_edge_list(2, {{0, 1}});
  const double p = std::min(1.0, mean_degree / static_cast<double>(size - 1));
  Rng rng(seed);
  while (true) {
    Graph g = er_gnp(size, p, rng);
    if (g.is_connected()) return g;
  }
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  std::size_t total = 0;
  for (const auto& part : parts) total += part.vertex_count();
  Graph g(total);
  std::size_t offset = 0;
  for (const auto& part : parts) {
    for (const auto& [u, v] : part.edges())
      g.add_edge(static_cast<VertexId>(u + offset), static_cast<VertexId>(v + offset));
    offset += part.vertex_count();
  }
  return g;
}

}  // namespace graphsiege
