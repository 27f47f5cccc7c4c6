#include "sturan/graph.hpp"

#include "sturan/error.hpp"

#include <algorithm>
#include <string>

namespace sturan {

namespace {

void check_capacity(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw CapacityExceeded("graph order " + std::to_string(n) + " outside [0, " +
                               std::to_string(kMaxVertices) + "]");
}

} // namespace

Graph::Graph(int n)
{
    check_capacity(n);
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

int Graph::size() const
{
    int twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw InvalidParameter("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") outside vertex range " + std::to_string(order()));
    if (u == v)
        throw InvalidParameter("loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v)
{
    adj_[u].reset(v);
    adj_[v].reset(u);
}

VertexSet Graph::closed_neighbors(int v) const
{
    auto s = adj_[v];
    s.set(v);
    return s;
}

VertexSet Graph::second_neighbors(int v) const
{
    return neighbors_of(adj_[v]) - closed_neighbors(v);
}

VertexSet Graph::neighbors_of(const VertexSet& s) const
{
    VertexSet out;
    for (int u : s)
        out |= adj_[u];
    return out;
}

VertexSet Graph::isolated_vertices() const
{
    VertexSet out;
    for (int v = 0; v < order(); ++v)
        if (adj_[v].empty())
            out.set(v);
    return out;
}

int Graph::min_degree() const
{
    int d = order() == 0 ? 0 : kMaxVertices;
    for (const auto& row : adj_)
        d = std::min(d, row.count());
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (const auto& row : adj_)
        d = std::max(d, row.count());
    return d;
}

int Graph::edges_within(const VertexSet& s) const
{
    int twice = 0;
    for (int v : s)
        twice += (adj_[v] & s).count();
    return twice / 2;
}

int Graph::edges_between(const VertexSet& a, const VertexSet& b) const
{
    int c = 0;
    for (int v : a)
        c += (adj_[v] & b).count();
    return c;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& s) const
{
    std::vector<int> index(adj_.size(), -1);
    int k = 0;
    for (int v : s)
        index[v] = k++;
    Graph h(k);
    for (int v : s)
        for (int u : adj_[v] & s)
            h.adj_[index[v]].set(index[u]);
    return h;
}

Graph Graph::permuted(std::span<const int> perm) const
{
    Graph h(order());
    for (int v = 0; v < order(); ++v)
        for (int u : adj_[v])
            h.adj_[perm[v]].set(perm[u]);
    return h;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b)
{
    if (auto c = a.order() <=> b.order(); c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.adj_.begin(), a.adj_.end(), b.adj_.begin(),
                                                  b.adj_.end());
}

Graph disjoint_union(const Graph& g, const Graph& h)
{
    const int n = g.order();
    Graph out(n + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + n, v + n);
    return out;
}

Graph join(const Graph& g, const Graph& h)
{
    if (g.order() + h.order() > kMaxVertices)
        throw CapacityExceeded("join would have " + std::to_string(g.order() + h.order()) +
                               " vertices");
    Graph out = disjoint_union(g, h);
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, n + v);
    return out;
}

Graph independent_set(int s)
{
    return Graph(s);
}

} // namespace sturan
