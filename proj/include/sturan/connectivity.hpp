#pragma once

#include "sturan/graph.hpp"

#include <vector>

namespace sturan {

/// Vertices reachable from v inside `within` (v must belong to `within`).
VertexSet reachable(const Graph& g, int v, const VertexSet& within);

/// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of the induced subgraph G[s], in original labels.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

/// Vertices whose deletion increases the number of components.
VertexSet cut_vertices(const Graph& g);

/// Connected with at least one vertex and no cut vertex (K_1 and K_2 count).
bool is_biconnected(const Graph& g);

} // namespace sturan
