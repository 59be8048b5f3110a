#include "graphsiege/discovery.hpp"

#include <algorithm>

namespace graphsiege {

std::optional<VertexId> DiscoveredView::to_local(VertexId global) const {
  auto pos = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (pos == to_global.end() || *pos != global) return std::nullopt;
  return static_cast<VertexId>(pos - to_global.begin());
}

DiscoveredView discover(const Graph& g, VertexId center, std::uint32_t radius) {
  if (center >= g.vertex_count()) throw VertexOutOfRangeError(center);
  if (!g.alive(center)) throw DeadCenterError(center);

  std::vector<VertexId> ball{center};
  std::vector<char> seen(g.vertex_count(), 0);
  seen[center] = 1;
  std::size_t frontier_begin = 0;
  for (std::uint32_t depth = 0; depth < radius && frontier_begin < ball.size(); ++depth) {
    const std::size_t frontier_end = ball.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (VertexId w : g.neighbors(ball[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          ball.push_back(w);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(ball.begin(), ball.end());

  DiscoveredView view;
  view.center = center;
  view.radius = radius;
  view.to_global = std::move(ball);
  view.local = Graph(view.to_global.size());
  for (VertexId lu = 0; lu < view.to_global.size(); ++lu) {
    for (VertexId gw : g.neighbors(view.to_global[lu])) {
      auto lw = view.to_local(gw);
      if (lw && lu < *lw) view.local.add_edge(lu, *lw);
    }
  }
  return view;
}

}  // namespace graphsiege
