#pragma once

#include "sturan/vertex_set.hpp"

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace sturan {

using Edge = std::pair<int, int>;

/// Undirected simple graph on at most kMaxVertices labelled vertices,
/// stored as one neighbour bit row per vertex.
///
/// Rows are kept symmetric with an empty diagonal; no bit at or above
/// order() is ever set.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    /// d_S(v) = |N(v) ∩ S|.
    int degree_in(int v, const VertexSet& s) const { return (adj_[v] & s).count(); }

    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet closed_neighbors(int v) const;
    /// Vertices at distance exactly two from v.
    VertexSet second_neighbors(int v) const;
    /// Union of the neighbourhoods of the vertices in s.
    VertexSet neighbors_of(const VertexSet& s) const;
    VertexSet isolated_vertices() const;

    int min_degree() const;
    int max_degree() const;

    /// Number of edges with both ends in s.
    int edges_within(const VertexSet& s) const;
    /// Number of edges with one end in a and the other in b (a, b disjoint).
    int edges_between(const VertexSet& a, const VertexSet& b) const;

    std::vector<Edge> edges() const;

    /// Subgraph induced by s, relabelled 0..|s|-1 in increasing vertex order.
    Graph induced(const VertexSet& s) const;
    /// Relabelled copy: vertex v becomes perm[v].
    Graph permuted(std::span<const int> perm) const;

    friend bool operator==(const Graph&, const Graph&) = default;
    /// Total order: by order, then rows lexicographically.
    friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

private:
    std::vector<VertexSet> adj_;
};

/// Disjoint union; vertices of h are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// G∇H: disjoint union plus every edge between the two parts.
Graph join(const Graph& g, const Graph& h);
/// The empty graph sK_1.
Graph independent_set(int s);

} // namespace sturan
