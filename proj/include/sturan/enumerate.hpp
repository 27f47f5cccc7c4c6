#pragma once

#include "sturan/graph.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sturan {

/// A forbidden (not necessarily induced) subgraph. Cycle, path and C_t^△
/// use the specialised deciders; anything else goes through the generic
/// embedder.
class Forbidden
{
public:
    enum class Kind
    {
        Pattern,
        Cycle,         // C_t
        Path,          // P_t, t vertices
        CycleTriangle, // C_t^△
    };

    static Forbidden cycle(int t);
    static Forbidden path(int vertices);
    static Forbidden cycle_triangle(int t);
    static Forbidden pattern(Graph g);

    /// Parses "cycle:T", "path:K", "c-triangle:T", "complete:K",
    /// "complete-bipartite:S,T" or "g6:STRING".
    static Forbidden parse(const std::string& text);

    Kind kind() const { return kind_; }
    const Graph& graph() const { return graph_; }
    bool found_in(const Graph& host) const;
    bool biconnected() const;
    /// Stable textual form (the parse syntax).
    std::string label() const;

private:
    Forbidden(Kind kind, int t, Graph g, std::string label);

    Kind kind_;
    int t_;
    Graph graph_;
    std::string label_;
};

struct EnumSpec
{
    int m_min = 1;
    int m_max = 1;
    /// Inclusive vertex-count range; n_max = 0 means the widest feasible
    /// (m_max + 1 connected, 2·m_max otherwise).
    int n_min = 2;
    int n_max = 0;
    std::vector<Forbidden> forbidden;
    bool connected_only = true;
    /// Set when connected-only results stand in for all graphs without
    /// isolated vertices. Only sound for 2-connected patterns, so validated.
    bool block_reduction = false;

    static EnumSpec edges(int m);
    static EnumSpec order(int n);

    int effective_n_max() const;
    /// Throws InvalidParameter / CapacityExceeded; `allow_large` lifts the
    /// documented exhaustive-scale limits.
    void validate(bool allow_large = false) const;
    /// Canonical description used to key checkpoint files.
    std::string fingerprint() const;
};

struct EnumOptions
{
    int jobs = 1;
    /// When false, forbidden patterns are only applied to emitted graphs.
    bool prune = true;
    bool allow_large = false;
    std::optional<std::filesystem::path> checkpoint;
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Visits every isomorphism class matching `spec` exactly once, as its
/// canonical form, in a deterministic order independent of `jobs`.
///
/// Classes are grown one edge at a time at fixed order n by canonical
/// augmentation: a child G+e is kept iff e lies in the automorphism orbit
/// of the canonical deletion edge of G+e. Any intermediate graph that
/// already contains a forbidden pattern is cut off together with its
/// subtree. In connected mode intermediates are one component plus
/// isolated vertices. Returns the number of graphs visited.
std::uint64_t enumerate_graphs(const EnumSpec& spec, const GraphVisitor& visit,
                               const EnumOptions& opts = {});

struct ClassRecord
{
    std::string g6;
    int n = 0;
    int m = 0;
    double lambda = 0.0;
};

/// Every visited class with its spectral radius, sorted by (n, m, g6).
/// λ is computed in the workers on the canonical form.
std::vector<ClassRecord> enumerate_records(const EnumSpec& spec, const EnumOptions& opts = {});

struct ExtremalRecord
{
    Graph best;                     // canonical
    double best_lambda = 0.0;
    std::vector<std::string> ties;  // g6 of all classes within 1e-9 of best_lambda
    std::uint64_t examined = 0;
    std::map<int, std::uint64_t> per_n;
};

/// Maximises the spectral radius over the enumerated family.
/// Throws PreconditionError when the family is empty.
ExtremalRecord max_spectral_radius(const EnumSpec& spec, const EnumOptions& opts = {});

struct BalisterResult
{
    int max_edges = 0;
    long long formula = 0;
    std::vector<Graph> extremal;    // canonical forms attaining max_edges
    std::vector<bool> in_family;    // extremal[i] ≅ G_{n,k,1} or G_{n,k,⌊(k−1)/2⌋}
    std::uint64_t examined = 0;
};

/// The bound max{C(k−1,2)+(n−k+1), C(⌈(k+1)/2⌉,2)+⌊(k−1)/2⌋(n−⌈(k+1)/2⌉)}.
long long balister_bound(int n, int k);

/// Exhaustive maximum edge count over connected P_{k+1}-free graphs on n
/// vertices and every class attaining it. Requires n > k ≥ 3 and n ≤ 9.
BalisterResult balister_extremal(int n, int k, const EnumOptions& opts = {});

} // namespace sturan
