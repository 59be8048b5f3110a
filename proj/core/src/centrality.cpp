#include "graphsiege/centrality.hpp"

#include <algorithm>
#include <map>

namespace graphsiege {

std::string to_string(const ComponentId& id) {
  if (id.is_vertex()) return std::to_string(id.u);
  return std::to_string(id.u) + "-" + std::to_string(id.v);
}

namespace {

struct Accumulated {
  std::vector<double> vertex;            // indexed by vertex id
  std::map<EdgeId, double> edge;
};

// Brandes' dependency accumulation over the shortest-path DAG of each
// source. Each unordered pair is visited from both endpoints, hence the
// final halving.
Accumulated accumulate(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Accumulated acc;
  acc.vertex.assign(n, 0.0);
  for (const auto& [u, v] : g.edges()) acc.edge[EdgeId(u, v)] = 0.0;

  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<long long> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<VertexId>> preds(n);

  for (VertexId s : g.alive_vertices()) {
    order.clear();
    for (VertexId v = 0; v < n; ++v) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
      preds[v].clear();
    }
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId u = order[head];
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[u] + 1) {
          sigma[w] += sigma[u];
          preds[w].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexId w = *it;
      for (VertexId u : preds[w]) {
        double c = sigma[u] / sigma[w] * (1.0 + delta[w]);
        delta[u] += c;
        acc.edge[EdgeId(u, w)] += c;
      }
      if (w != s) acc.vertex[w] += delta[w];
    }
  }
  for (auto& x : acc.vertex) x /= 2.0;
  for (auto& [e, x] : acc.edge) x /= 2.0;
  return acc;
}

}  // namespace

BetweennessTable vertex_betweenness(const Graph& g) {
  auto acc = accumulate(g);
  const double n = static_cast<double>(g.alive_count());
  const double norm = (n - 1.0) * (n - 2.0) / 2.0;
  BetweennessTable table;
  table.kind = TableKind::Vertex;
  for (VertexId v : g.alive_vertices()) {
    table.ids.push_back(ComponentId::vertex(v));
    table.raw.push_back(acc.vertex[v]);
    table.normalized.push_back(norm > 0 ? acc.vertex[v] / norm : 0.0);
  }
  return table;
}

BetweennessTable edge_betweenness(const Graph& g) {
  auto acc = accumulate(g);
  const double n = static_cast<double>(g.alive_count());
  const double norm = n * (n - 1.0) / 2.0;
  BetweennessTable table;
  table.kind = TableKind::Edge;
  for (const auto& [e, raw] : acc.edge) {
    table.ids.push_back(ComponentId::edge(e));
    table.raw.push_back(raw);
    table.normalized.push_back(norm > 0 ? raw / norm : 0.0);
  }
  return table;
}

ComponentId extremal(const BetweennessTable& table, SelectMode mode, Rng& rng) {
  if (table.size() == 0) throw EmptyTableError();
  if (mode == SelectMode::Random) return table.ids[rng.below(table.size())];

  double target = 0;
  switch (mode) {
    case SelectMode::Low:
      target = *std::min_element(table.raw.begin(), table.raw.end());
      break;
    case SelectMode::High:
      target = *std::max_element(table.raw.begin(), table.raw.end());
      break;
    case SelectMode::Median: {
      std::vector<double> values = table.raw;
      std::sort(values.begin(), values.end());
      target = values[(values.size() - 1) / 2];  // lower median
      break;
    }
    case SelectMode::Random:
      break;
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.raw[i] == target) hits.push_back(i);
  return table.ids[hits[rng.below(hits.size())]];
}

}  // namespace graphsiege
