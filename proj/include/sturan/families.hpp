#pragma once

#include "sturan/graph.hpp"

#include <string>
#include <vector>

namespace sturan {

enum class Family
{
    Complete,          // K_n                   params: n
    Cycle,             // C_n                   params: n
    Path,              // P_n                   params: n
    CompleteBipartite, // K_{s,t}               params: s, t
    JoinCliqueIndep,   // K_k ∇ sK_1            params: k, s
    CycleTriangle,     // C_t^△                 params: t
    Gnks,              // (K_{k-2s} ∪ (n-k+s)K_1) ∇ K_s   params: n, k, s
    F3,                // K_4 plus k pendants on one clique vertex   params: k
};

struct FamilySpec
{
    Family family;
    std::vector<int> params;

    static FamilySpec complete(int n) { return {Family::Complete, {n}}; }
    static FamilySpec cycle(int n) { return {Family::Cycle, {n}}; }
    static FamilySpec path(int n) { return {Family::Path, {n}}; }
    static FamilySpec complete_bipartite(int s, int t) { return {Family::CompleteBipartite, {s, t}}; }
    static FamilySpec join_clique_indep(int k, int s) { return {Family::JoinCliqueIndep, {k, s}}; }
    static FamilySpec cycle_triangle(int t) { return {Family::CycleTriangle, {t}}; }
    static FamilySpec gnks(int n, int k, int s) { return {Family::Gnks, {n, k, s}}; }
    static FamilySpec f3(int k) { return {Family::F3, {k}}; }
};

/// Builds the family member. Dominating / clique vertices get the lowest
/// labels. Throws InvalidParameter naming the violated range.
Graph construct(const FamilySpec& spec);

/// Closed-form edge count of the family member (same validation as construct).
long long family_edge_count(const FamilySpec& spec);

std::string family_name(Family f);
/// Inverse of family_name; throws InvalidParameter on unknown names.
Family parse_family(const std::string& name);

} // namespace sturan
