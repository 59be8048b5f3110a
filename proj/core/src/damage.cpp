#include "graphsiege/damage.hpp"

#include <algorithm>

#include "graphsiege/centrality.hpp"
#include "graphsiege/paths.hpp"

namespace graphsiege {

namespace {

// Highest degree, then highest betweenness within the fragment, then
// lowest id. Betweenness is only computed when degrees tie.
VertexId anchor_of(const Graph& g, const std::vector<VertexId>& fragment) {
  std::size_t best_degree = 0;
  std::vector<VertexId> tied;
  for (VertexId v : fragment) {
    const std::size_t d = g.degree(v);
    if (tied.empty() || d > best_degree) {
      best_degree = d;
      tied.assign(1, v);
    } else if (d == best_degree) {
      tied.push_back(v);
    }
  }
  if (tied.size() == 1) return tied.front();

  Graph local(fragment.size());
  for (std::size_t i = 0; i < fragment.size(); ++i)
    for (VertexId w : g.neighbors(fragment[i])) {
      auto pos = std::lower_bound(fragment.begin(), fragment.end(), w);
      std::size_t k = static_cast<std::size_t>(pos - fragment.begin());
      if (i < k) local.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(k));
    }
  auto table = vertex_betweenness(local);

  VertexId winner = tied.front();
  double winner_score = -1.0;
  for (VertexId v : tied) {
    auto pos = std::lower_bound(fragment.begin(), fragment.end(), v);
    double score = table.raw[static_cast<std::size_t>(pos - fragment.begin())];
    if (score > winner_score) {
      winner_score = score;
      winner = v;
    }
  }
  return winner;
}

}  // namespace

CoalesceResult coalesce(const Graph& g) {
  CoalesceResult res{g, {}};
  auto fragments = res.graph.components();  // (size desc, min id asc), members sorted
  while (fragments.size() > 1) {
    VertexId a = anchor_of(res.graph, fragments[0]);
    VertexId b = anchor_of(res.graph, fragments[1]);
    res.graph.add_edge(a, b);
    res.edges_added.emplace_back(a, b);

    auto merged = std::move(fragments[0]);
    merged.insert(merged.end(), fragments[1].begin(), fragments[1].end());
    std::sort(merged.begin(), merged.end());
    fragments.erase(fragments.begin() + 1);
    fragments[0] = std::move(merged);
    std::sort(fragments.begin(), fragments.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() > y.size();
      return x.front() < y.front();
    });
  }
  return res;
}

DamageReport damage(const Graph& g) {
  DamageReport rep;
  rep.fragments = fragment_profile(g);
  rep.aipl_fragmented = aipl(g);

  if (g.alive_count() <= 1) {
    // a single node still performs all of its functions
    rep.aipl_reference = rep.aipl_fragmented;
    rep.ratio = 1.0;
    rep.damage = 0.0;
    return rep;
  }
  if (rep.fragments.sizes.size() <= 1) {
    rep.aipl_reference = rep.aipl_fragmented;
    rep.ratio = 1.0;
    rep.damage = 0.0;
    return rep;
  }

  auto reference = coalesce(g);
  rep.edges_added = std::move(reference.edges_added);
  rep.aipl_reference = aipl(reference.graph);
  rep.ratio = rep.aipl_reference > 0 ? rep.aipl_fragmented / rep.aipl_reference : 1.0;
  rep.damage = 1.0 - rep.ratio;
  return rep;
}

double robustness_ratio(double efficiency_after, double efficiency_before) {
  if (efficiency_before <= 0) throw ZeroBaselineError();
  return efficiency_after / efficiency_before;
}

}  // namespace graphsiege
