#pragma once

#include "sturan/graph.hpp"

#include <optional>
#include <vector>

namespace sturan {

enum class Containment
{
    Subgraph, // pattern edges map to host edges
    Induced,  // additionally, pattern non-edges map to host non-edges
};

struct Witness
{
    /// mapping[p] is the host vertex assigned to pattern vertex p (injective).
    std::vector<int> mapping;
    Containment mode = Containment::Subgraph;
};

/// Lexicographically least embedding of `pattern` into `host`, found by
/// backtracking over pattern vertices in index order with degree and
/// neighbourhood-mask pruning.
std::optional<Witness> contains_subgraph(const Graph& host, const Graph& pattern,
                                         Containment mode = Containment::Subgraph);

/// Re-checks a witness edge by edge, independently of the search.
bool verify_witness(const Graph& host, const Graph& pattern, const Witness& w);

/// Whether C_t is a (not necessarily induced) subgraph. Requires 3 ≤ t ≤ n.
bool has_cycle(const Graph& g, int t);

/// Whether C_t^△ is a subgraph: some t-cycle has an edge uv and a vertex off
/// the cycle adjacent to both u and v. Requires 3 ≤ t ≤ n − 1.
bool has_c_triangle(const Graph& g, int t);

/// Whether some simple path has k vertices (k ≥ 1; depth-first, early exit).
bool has_path(const Graph& g, int k);

/// Maximum number of vertices on a simple path (bitmask dynamic program).
/// Requires n ≤ 16.
int longest_path_order(const Graph& g);

struct DominationCertificate
{
    enum class Kind
    {
        CompleteBipartite,
        InducedC6,
    };
    Kind kind = Kind::CompleteBipartite;
    /// CompleteBipartite: the two sides; every cross pair is an edge.
    /// InducedC6: part_a lists the six vertices in cycle order, part_b is empty.
    std::vector<int> part_a;
    std::vector<int> part_b;
    /// Whether part_a ∪ part_b dominates V(G), re-checked after the search.
    bool dominating = false;
};

/// Searches for a dominating complete bipartite subgraph (by increasing
/// vertex count) and then for a dominating induced C_6. A single vertex
/// counts as K_{1,0}, which only matters for K_1 itself. Requires a
/// connected graph with n ≤ 20.
std::optional<DominationCertificate> dominating_structure(const Graph& g);

/// True when the certificate's parts are valid for g (structure and domination).
bool verify_certificate(const Graph& g, const DominationCertificate& c);

} // namespace sturan
