#include "sturan/families.hpp"

#include "sturan/error.hpp"

#include <array>
#include <string>
#include <utility>

namespace sturan {

namespace {

constexpr std::array<std::pair<Family, const char*>, 8> kNames{{
    {Family::Complete, "complete"},
    {Family::Cycle, "cycle"},
    {Family::Path, "path"},
    {Family::CompleteBipartite, "complete-bipartite"},
    {Family::JoinCliqueIndep, "join-clique-indep"},
    {Family::CycleTriangle, "cycle-triangle"},
    {Family::Gnks, "gnks"},
    {Family::F3, "f3"},
}};

std::size_t arity(Family f)
{
    switch (f) {
    case Family::CompleteBipartite:
    case Family::JoinCliqueIndep:
        return 2;
    case Family::Gnks:
        return 3;
    default:
        return 1;
    }
}

[[noreturn]] void bad(const FamilySpec& spec, const std::string& what)
{
    throw InvalidParameter(family_name(spec.family) + ": " + what);
}

void require_order(const FamilySpec& spec, long long n)
{
    if (n > kMaxVertices)
        throw CapacityExceeded(family_name(spec.family) + ": " + std::to_string(n) +
                               " vertices exceeds capacity " + std::to_string(kMaxVertices));
}

void validate(const FamilySpec& spec)
{
    if (spec.params.size() != arity(spec.family))
        bad(spec, "expected " + std::to_string(arity(spec.family)) + " parameters, got " +
                      std::to_string(spec.params.size()));
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::Complete:
    case Family::Path:
        if (p[0] < 1)
            bad(spec, "requires n >= 1");
        require_order(spec, p[0]);
        break;
    case Family::Cycle:
        if (p[0] < 3)
            bad(spec, "requires n >= 3");
        require_order(spec, p[0]);
        break;
    case Family::CompleteBipartite:
        if (p[0] < 1 || p[1] < 1)
            bad(spec, "requires s >= 1 and t >= 1");
        require_order(spec, static_cast<long long>(p[0]) + p[1]);
        break;
    case Family::JoinCliqueIndep:
        if (p[0] < 1 || p[1] < 0)
            bad(spec, "requires k >= 1 and s >= 0");
        require_order(spec, static_cast<long long>(p[0]) + p[1]);
        break;
    case Family::CycleTriangle:
        if (p[0] < 3)
            bad(spec, "requires t >= 3");
        require_order(spec, static_cast<long long>(p[0]) + 1);
        break;
    case Family::Gnks:
        if (!(p[0] >= p[1] && p[1] > 2 * p[2] && p[2] > 0))
            bad(spec, "requires n >= k > 2s > 0");
        require_order(spec, p[0]);
        break;
    case Family::F3:
        if (p[0] < 0)
            bad(spec, "requires k >= 0");
        require_order(spec, static_cast<long long>(p[0]) + 4);
        break;
    }
}

long long choose2(long long n)
{
    return n * (n - 1) / 2;
}

} // namespace

Graph construct(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::Complete: {
        Graph g(p[0]);
        for (int u = 0; u < p[0]; ++u)
            for (int v = u + 1; v < p[0]; ++v)
                g.add_edge(u, v);
        return g;
    }
    case Family::Cycle: {
        Graph g(p[0]);
        for (int v = 0; v < p[0]; ++v)
            g.add_edge(v, (v + 1) % p[0]);
        return g;
    }
    case Family::Path: {
        Graph g(p[0]);
        for (int v = 0; v + 1 < p[0]; ++v)
            g.add_edge(v, v + 1);
        return g;
    }
    case Family::CompleteBipartite:
        return join(independent_set(p[0]), independent_set(p[1]));
    case Family::JoinCliqueIndep:
        return join(construct(FamilySpec::complete(p[0])), independent_set(p[1]));
    case Family::CycleTriangle: {
        const int t = p[0];
        Graph g(t + 1);
        for (int v = 0; v < t; ++v)
            g.add_edge(v, (v + 1) % t);
        g.add_edge(t, 0);
        g.add_edge(t, 1);
        return g;
    }
    case Family::Gnks: {
        const int n = p[0], k = p[1], s = p[2];
        Graph inner = disjoint_union(construct(FamilySpec::complete(k - 2 * s)),
                                     independent_set(n - k + s));
        return join(construct(FamilySpec::complete(s)), inner);
    }
    case Family::F3: {
        Graph g(p[0] + 4);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                g.add_edge(u, v);
        for (int i = 0; i < p[0]; ++i)
            g.add_edge(0, 4 + i);
        return g;
    }
    }
    bad(spec, "unknown family");
}

long long family_edge_count(const FamilySpec& spec)
{
    validate(spec);
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::Complete:
        return choose2(p[0]);
    case Family::Cycle:
        return p[0];
    case Family::Path:
        return p[0] - 1;
    case Family::CompleteBipartite:
        return static_cast<long long>(p[0]) * p[1];
    case Family::JoinCliqueIndep:
        return choose2(p[0]) + static_cast<long long>(p[0]) * p[1];
    case Family::CycleTriangle:
        return p[0] + 2;
    case Family::Gnks: {
        const long long n = p[0], k = p[1], s = p[2];
        return choose2(s) + s * (n - s) + choose2(k - 2 * s);
    }
    case Family::F3:
        return 6 + p[0];
    }
    bad(spec, "unknown family");
}

std::string family_name(Family f)
{
    for (auto [fam, name] : kNames)
        if (fam == f)
            return name;
    return "unknown";
}

Family parse_family(const std::string& name)
{
    for (auto [fam, n] : kNames)
        if (name == n)
            return fam;
    throw InvalidParameter("unknown family '" + name + "'");
}

} // namespace sturan
