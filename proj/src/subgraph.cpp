#include "sturan/subgraph.hpp"

#include "sturan/connectivity.hpp"
#include "sturan/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace sturan {

namespace {

class Embedder
{
public:
    Embedder(const Graph& host, const Graph& pattern, Containment mode)
        : host_(host), pattern_(pattern), mode_(mode),
          mapping_(static_cast<std::size_t>(pattern.order()), -1)
    {
    }

    bool run() { return extend(0, VertexSet{}); }
    const std::vector<int>& mapping() const { return mapping_; }

private:
    bool extend(int i, const VertexSet& used)
    {
        if (i == pattern_.order())
            return true;
        VertexSet cand = host_.vertices() - used;
        for (int j = 0; j < i && !cand.empty(); ++j) {
            const auto& hn = host_.neighbors(mapping_[static_cast<std::size_t>(j)]);
            if (pattern_.has_edge(i, j))
                cand &= hn;
            else if (mode_ == Containment::Induced)
                cand -= hn;
        }
        const int need = pattern_.degree(i);
        for (int h : cand) {
            if (host_.degree(h) < need)
                continue;
            mapping_[static_cast<std::size_t>(i)] = h;
            auto next = used;
            next.set(h);
            if (extend(i + 1, next))
                return true;
        }
        mapping_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    Containment mode_;
    std::vector<int> mapping_;
};

/// Enumerates t-cycles whose least vertex is path[0], each once per
/// direction class, and stops as soon as `accept(path, used)` returns true.
template <typename Accept>
class CycleSearch
{
public:
    CycleSearch(const Graph& g, int t, Accept accept)
        : g_(g), t_(t), accept_(accept), path_(static_cast<std::size_t>(t))
    {
    }

    bool run()
    {
        for (int s = 0; s + t_ <= g_.order(); ++s) {
            allowed_ = g_.vertices() - VertexSet::range(s + 1);
            if (allowed_.count() < t_ - 1)
                break;
            path_[0] = s;
            if (grow(1, VertexSet::single(s)))
                return true;
        }
        return false;
    }

private:
    bool grow(int len, const VertexSet& used)
    {
        const int last = path_[static_cast<std::size_t>(len - 1)];
        VertexSet cand = (g_.neighbors(last) & allowed_) - used;
        if (len == t_ - 1) {
            cand &= g_.neighbors(path_[0]);
            cand -= VertexSet::range(path_[1] + 1); // orientation: last > second
        }
        for (int v : cand) {
            path_[static_cast<std::size_t>(len)] = v;
            auto next = used;
            next.set(v);
            if (len + 1 == t_) {
                if (accept_(path_, next))
                    return true;
            } else if (grow(len + 1, next)) {
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    int t_;
    Accept accept_;
    std::vector<int> path_;
    VertexSet allowed_;
};

template <typename Accept>
bool search_cycles(const Graph& g, int t, Accept accept)
{
    return CycleSearch<Accept>(g, t, accept).run();
}

bool path_from(const Graph& g, int v, const VertexSet& used, int remaining)
{
    if (remaining == 0)
        return true;
    for (int u : g.neighbors(v) - used) {
        auto next = used;
        next.set(u);
        if (path_from(g, u, next, remaining - 1))
            return true;
    }
    return false;
}

bool dominates(const Graph& g, const VertexSet& s)
{
    return (g.neighbors_of(s) | s) == g.vertices();
}

std::vector<int> members(const VertexSet& s)
{
    return {s.begin(), s.end()};
}

} // namespace

std::optional<Witness> contains_subgraph(const Graph& host, const Graph& pattern,
                                         Containment mode)
{
    if (pattern.order() > host.order())
        return std::nullopt;
    if (mode == Containment::Subgraph && pattern.size() > host.size())
        return std::nullopt;
    Embedder e(host, pattern, mode);
    if (!e.run())
        return std::nullopt;
    return Witness{e.mapping(), mode};
}

bool verify_witness(const Graph& host, const Graph& pattern, const Witness& w)
{
    const int p = pattern.order();
    if (static_cast<int>(w.mapping.size()) != p)
        return false;
    VertexSet image;
    for (int h : w.mapping) {
        if (h < 0 || h >= host.order() || image.test(h))
            return false;
        image.set(h);
    }
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            const bool host_edge =
                host.has_edge(w.mapping[static_cast<std::size_t>(a)], w.mapping[static_cast<std::size_t>(b)]);
            if (pattern.has_edge(a, b) && !host_edge)
                return false;
            if (w.mode == Containment::Induced && !pattern.has_edge(a, b) && host_edge)
                return false;
        }
    return true;
}

bool has_cycle(const Graph& g, int t)
{
    if (t < 3 || t > g.order())
        throw InvalidParameter("has_cycle: t = " + std::to_string(t) + " outside [3, " +
                               std::to_string(g.order()) + "]");
    return search_cycles(g, t, [](const std::vector<int>&, const VertexSet&) { return true; });
}

bool has_c_triangle(const Graph& g, int t)
{
    if (t < 3)
        throw InvalidParameter("has_c_triangle: t = " + std::to_string(t) + " below 3");
    // The pattern has t + 1 vertices; a smaller host cannot hold it.
    if (t >= g.order() || g.size() < t + 2)
        return false;
    return search_cycles(g, t, [&g, t](const std::vector<int>& path, const VertexSet& used) {
        for (int i = 0; i < t; ++i) {
            const int a = path[static_cast<std::size_t>(i)];
            const int b = path[static_cast<std::size_t>((i + 1) % t)];
            if (((g.neighbors(a) & g.neighbors(b)) - used).first() >= 0)
                return true;
        }
        return false;
    });
}

bool has_path(const Graph& g, int k)
{
    if (k < 1)
        throw InvalidParameter("has_path: k must be >= 1");
    if (k > g.order())
        return false;
    for (int v = 0; v < g.order(); ++v)
        if (path_from(g, v, VertexSet::single(v), k - 1))
            return true;
    return false;
}

int longest_path_order(const Graph& g)
{
    constexpr int kLimit = 16;
    const int n = g.order();
    if (n > kLimit)
        throw CapacityExceeded("longest_path_order: order " + std::to_string(n) + " exceeds " +
                               std::to_string(kLimit));
    if (n == 0)
        return 0;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).word(0));
    // ends[mask]: vertices v such that a path with vertex set `mask` ends at v.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v)
        ends[std::size_t{1} << v] = 1U << v;
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (e == 0)
            continue;
        best = std::max(best, std::popcount(mask));
        while (e != 0) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext != 0) {
                const int u = std::countr_zero(ext);
                ext &= ext - 1;
                ends[mask | (1U << u)] |= 1U << u;
            }
        }
    }
    return best;
}

std::optional<DominationCertificate> dominating_structure(const Graph& g)
{
    constexpr int kLimit = 20;
    const int n = g.order();
    if (n > kLimit)
        throw CapacityExceeded("dominating_structure: order " + std::to_string(n) +
                               " exceeds " + std::to_string(kLimit));
    if (!is_connected(g))
        throw PreconditionError("dominating_structure: graph is disconnected");

    using Kind = DominationCertificate::Kind;
    if (n == 1)
        return DominationCertificate{Kind::CompleteBipartite, {0}, {}, true};

    auto as_set = [](std::uint32_t bits) {
        VertexSet s;
        for (int v = 0; bits != 0; ++v, bits >>= 1)
            if (bits & 1U)
                s.set(v);
        return s;
    };
    auto next_subset = [](std::uint32_t x) {
        const std::uint32_t c = x & (~x + 1);
        const std::uint32_t r = x + c;
        return (((r ^ x) >> 2) / c) | r;
    };
    const std::uint32_t universe = (n == 32) ? ~0U : ((1U << n) - 1);

    for (int k = 2; k <= n; ++k) {
        for (std::uint32_t bits = (1U << k) - 1; bits <= universe; bits = next_subset(bits)) {
            const auto x = as_set(bits);
            if (dominates(g, x)) {
                // x spans a complete bipartite graph iff its complement is disconnected.
                VertexSet side = VertexSet::single(x.first());
                VertexSet frontier = side;
                while (!frontier.empty()) {
                    VertexSet grow;
                    for (int v : frontier)
                        grow |= x - g.neighbors(v);
                    grow -= side;
                    side |= grow;
                    frontier = grow;
                }
                if (side != x)
                    return DominationCertificate{Kind::CompleteBipartite, members(side),
                                                 members(x - side), true};
            }
            if (bits == universe)
                break;
        }
    }

    if (n >= 6) {
        for (std::uint32_t bits = (1U << 6) - 1; bits <= universe; bits = next_subset(bits)) {
            const auto x = as_set(bits);
            bool two_regular = true;
            for (int v : x)
                two_regular = two_regular && g.degree_in(v, x) == 2;
            if (two_regular && reachable(g, x.first(), x) == x && dominates(g, x)) {
                std::vector<int> order{x.first()};
                int prev = -1;
                while (order.size() < 6) {
                    const int cur = order.back();
                    const auto nb = g.neighbors(cur) & x;
                    int nxt = nb.first();
                    if (nxt == prev)
                        nxt = nb.next(nxt);
                    prev = cur;
                    order.push_back(nxt);
                }
                return DominationCertificate{Kind::InducedC6, order, {}, true};
            }
            if (bits == universe)
                break;
        }
    }
    return std::nullopt;
}

bool verify_certificate(const Graph& g, const DominationCertificate& c)
{
    VertexSet all;
    for (const auto* part : {&c.part_a, &c.part_b})
        for (int v : *part) {
            if (v < 0 || v >= g.order())
                return false;
            all.set(v);
        }
    if (all.count() != static_cast<int>(c.part_a.size() + c.part_b.size()))
        return false;
    if (!dominates(g, all))
        return false;
    if (c.kind == DominationCertificate::Kind::CompleteBipartite) {
        if (c.part_a.empty())
            return false;
        for (int a : c.part_a)
            for (int b : c.part_b)
                if (!g.has_edge(a, b))
                    return false;
        return !c.part_b.empty() || g.order() == 1;
    }
    if (c.part_a.size() != 6 || !c.part_b.empty() || g.edges_within(all) != 6)
        return false;
    for (std::size_t i = 0; i < 6; ++i)
        if (!g.has_edge(c.part_a[i], c.part_a[(i + 1) % 6]))
            return false;
    return true;
}

} // namespace sturan
