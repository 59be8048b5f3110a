#pragma once

#include <cstdint>
#include <vector>

#include "graphsiege/graph.hpp"

namespace graphsiege {

enum class Family { ErGnp, ErGnm, WattsStrogatz, BarabasiAlbert };

struct GenSpec {
  Family family = Family::ErGnp;
  std::size_t n = 0;
  double p = 0;              // ErGnp edge probability / WattsStrogatz rewire prob
  std::size_t m_edges = 0;   // ErGnm edge count
  std::size_t k = 0;         // WattsStrogatz ring degree (even, < n)
  std::size_t m_attach = 0;  // BarabasiAlbert edges per new vertex (>= 1, < n)
  std::uint64_t seed = 0;
};

/// Random (G(n,p) / G(n,m)), small-world (ring lattice with rewiring) or
/// scale-free (preferential attachment) graph. Deterministic under seed;
/// output is always simple. Throws BadSpecError on invalid parameters.
Graph generate(const GenSpec& spec);

/// Connected random fragment for the damage scale experiments: an
/// edge-probability draw aiming at the given mean degree (capped at
/// complete), re-drawn until connected.
Graph connected_fragment(std::size_t size, double mean_degree, std::uint64_t seed);

/// Disjoint union; vertex ids of each part are shifted past the previous
/// parts.
Graph disjoint_union(const std::vector<Graph>& parts);

}  // namespace graphsiege
