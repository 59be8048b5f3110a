#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphsiege/graph.hpp"

namespace graphsiege {

/// What an attacker knows after expanding `radius` hops from a center
/// vertex: the induced subgraph on every vertex within that distance,
/// re-indexed with dense local ids.
struct DiscoveredView {
  VertexId center = 0;               // global id
  std::uint32_t radius = 0;
  Graph local;
  std::vector<VertexId> to_global;   // local id -> global id, ascending

  /// Local id of a global vertex, if discovered.
  std::optional<VertexId> to_local(VertexId global) const;
};

/// Breadth-first ball of the given hop radius around `center`, with all
/// induced edges. A radius at least the center's eccentricity yields the
/// whole component.
DiscoveredView discover(const Graph& g, VertexId center, std::uint32_t radius);

}  // namespace graphsiege
