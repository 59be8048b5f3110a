#include "graphsiege/graph.hpp"

#include <algorithm>

namespace graphsiege {

void Graph::check_in_range(VertexId v) const {
  if (v >= adjacency_.size()) throw VertexOutOfRangeError(v);
}

Graph Graph::from_edge_list(std::size_t n,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<VertexId> Graph::alive_vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_count_);
  for (VertexId v = 0; v < alive_.size(); ++v)
    if (alive_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u)
    for (VertexId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw SelfLoopError(u);
  check_in_range(u);
  check_in_range(v);
  if (!alive_[u]) throw AlreadyRemovedError(u);
  if (!alive_[v]) throw AlreadyRemovedError(v);
  auto& adj_u = adjacency_[u];
  auto pos = std::lower_bound(adj_u.begin(), adj_u.end(), v);
  if (pos != adj_u.end() && *pos == v) throw DuplicateEdgeError(u, v);
  adj_u.insert(pos, v);
  auto& adj_v = adjacency_[v];
  adj_v.insert(std::lower_bound(adj_v.begin(), adj_v.end(), u), u);
  ++edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  check_in_range(v);
  if (!alive_[v]) throw AlreadyRemovedError(v);
  for (VertexId w : adjacency_[v]) {
    auto& adj = adjacency_[w];
    adj.erase(std::lower_bound(adj.begin(), adj.end(), v));
  }
  edge_count_ -= adjacency_[v].size();
  adjacency_[v].clear();
  alive_[v] = 0;
  --alive_count_;
}

void Graph::remove_edge(const EdgeId& e) {
  if (!has_edge(e.first, e.second)) throw NoSuchEdgeError(e.first, e.second);
  auto& adj_u = adjacency_[e.first];
  adj_u.erase(std::lower_bound(adj_u.begin(), adj_u.end(), e.second));
  auto& adj_v = adjacency_[e.second];
  adj_v.erase(std::lower_bound(adj_v.begin(), adj_v.end(), e.first));
  --edge_count_;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<std::vector<VertexId>> comps;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<VertexId> queue;
  for (VertexId start = 0; start < adjacency_.size(); ++start) {
    if (!alive_[start] || seen[start]) continue;
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : adjacency_[queue[head]]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  // members are sorted, so front() is the smallest id in each component
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

bool Graph::is_connected() const {
  if (alive_count_ <= 1) return true;
  return components().size() == 1;
}

}  // namespace graphsiege
