#pragma once

#include <vector>

#include "graphsiege/fragmentation.hpp"
#include "graphsiege/graph.hpp"

namespace graphsiege {

struct CoalesceResult {
  Graph graph;
  std::vector<EdgeId> edges_added;  // one per join, m-1 in total
};

/// Builds the unfragmented reference graph: repeatedly joins the two
/// largest fragments by a single edge between their anchor vertices until
/// one component remains. The anchor of a fragment is its highest-degree
/// vertex, ties broken by highest vertex betweenness within the fragment,
/// then by lowest id; anchors are re-evaluated after every join.
CoalesceResult coalesce(const Graph& g);

struct DamageReport {
  double aipl_fragmented = 0;
  double aipl_reference = 0;
  double ratio = 1;    // aipl_fragmented / aipl_reference
  double damage = 0;   // 1 - ratio
  FragmentProfile fragments;
  std::vector<EdgeId> edges_added;
};

/// Damage of a graph as one minus the ratio of its average inverse path
/// length to that of its coalesced reference. 0 means fully functional
/// (every connected graph, and the 0/1-vertex limit), 1 means destroyed
/// (totally disconnected with at least 2 vertices).
DamageReport damage(const Graph& g);

/// Efficiency ratio of a changed graph against a baseline. Throws
/// ZeroBaselineError when the baseline efficiency is 0.
double robustness_ratio(double efficiency_after, double efficiency_before);

}  // namespace graphsiege
