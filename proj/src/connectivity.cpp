#include "sturan/connectivity.hpp"

namespace sturan {

VertexSet reachable(const Graph& g, int v, const VertexSet& within)
{
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier)
            next |= g.neighbors(u);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s)
{
    std::vector<VertexSet> out;
    VertexSet left = s;
    while (!left.empty()) {
        auto c = reachable(g, left.first(), s);
        out.push_back(c);
        left -= c;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    return components_within(g, g.vertices());
}

bool is_connected(const Graph& g)
{
    return g.order() > 0 && reachable(g, 0, g.vertices()) == g.vertices();
}

VertexSet cut_vertices(const Graph& g)
{
    const auto all = g.vertices();
    const auto base = components(g).size();
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        auto rest = all;
        rest.reset(v);
        if (components_within(g, rest).size() > base)
            out.set(v);
    }
    return out;
}

bool is_biconnected(const Graph& g)
{
    return is_connected(g) && cut_vertices(g).empty();
}

} // namespace sturan
