#pragma once

#include "sturan/enumerate.hpp"
#include "sturan/graph.hpp"
#include "sturan/report.hpp"
#include "sturan/spectral.hpp"

#include <string>
#include <vector>

namespace sturan {

/// Neighbourhood split around the extremal vertex u*.
struct Decomposition
{
    int u_star = -1;
    VertexSet nbhd;  // N(u*)
    VertexSet n0;    // isolated vertices of G[N(u*)]
    VertexSet nplus; // N(u*) \ N0
    VertexSet w;     // V \ N[u*]
    VertexSet n2;    // distance exactly two from u*
    /// Non-trivial components of G[N(u*)], ordered by smallest member.
    std::vector<VertexSet> components_h;
    SpectralResult perron;

    double ratio(int v) const
    {
        return perron.x[static_cast<std::size_t>(v)] / perron.x[static_cast<std::size_t>(u_star)];
    }
};

/// Requires a connected graph with an edge (PreconditionError otherwise).
Decomposition decompose(const Graph& g, const SpectralOptions& opts = {});

enum class EtaClass
{
    K5,
    K5MinusE,
    K4,
    K5Minus2E,
    K2,
    Other,
};

std::string eta_class_name(EtaClass c);
/// Class of a small graph by isomorphism against the named graphs.
EtaClass classify_eta(const Graph& h);
/// Bound on e(H) − 2|V(H)| for δ(H) ≥ 2: 0, −1, −2, −2 and −3 otherwise.
int eta_class_cap(EtaClass c);

struct EtaValue
{
    /// Σ_{u∈H} (d_H(u) − 2) x_u / x_{u*} − e(H)
    double value = 0.0;
    /// e(H) − 2|V(H)|, an upper bound on value when δ(H) ≥ 2.
    int upper_bound = 0;
    EtaClass class_label = EtaClass::Other;
    int min_degree = 0;
};

/// η of a non-trivial component `h` of G[N(u*)]. Throws PreconditionError
/// when `h` is not one of d.components_h.
EtaValue eta(const Graph& g, const Decomposition& d, const VertexSet& h);

struct Eq4Terms
{
    double lambda = 0.0;
    double threshold = 0.0; // 1 + √(m − 2)
    double eta_sum = 0.0;
    double n0_weight = 0.0; // Σ_{u∈N0} x_u / x_{u*}
    int e_w = 0;
    double rhs = 0.0;       // eta_sum − 2·n0_weight + 3
    double slack = 0.0;     // rhs − e_w
    bool hypothesis = false;
};

/// Evaluates both sides of e(W) ≤ Σ_H η(H) − 2 Σ_{N0} x_u/x_{u*} + 3
/// without checking the λ ≥ 1+√(m−2) hypothesis.
Eq4Terms eq4_terms(const Graph& g, const Decomposition& d);

/// rhs − e(W). Throws HypothesisViolated when λ < 1+√(m−2) − 1e-9.
double eq4_slack(const Graph& g, const SpectralOptions& opts = {});

enum class VerifyMode
{
    Exhaustive,
    Certificate,
};

/// Upper limit for exhaustive claim checks over edge counts.
inline constexpr int kExhaustiveEdgeLimit = 12;

/// Exhaustive: max λ over connected C_6^△-free graphs with m edges
/// (2 ≤ m ≤ 12), recorded against 1+√(m−2) and never asserted, since the
/// claim needs m ≥ 27. Certificate: m ≡ 0 (mod 3); checks that
/// K_3 ∇ ((m−3)/3)K_1 is C_6^△-free and C_7-free with λ = 1+√(m−2) to 1e-9.
Report verify_theorem1(int m, VerifyMode mode, const EnumOptions& opts = {});

/// Exhaustive: every connected graph with m edges and λ ≥ 1+√(m−2) either
/// contains C_3..C_7 or is K_3 ∇ ((m−3)/3)K_1; outcome recorded.
/// Certificate: the exceptional graph has C_3..C_6 but no C_7.
Report verify_corollary(int m, VerifyMode mode, const EnumOptions& opts = {});

/// Connected P_6-free H with δ(H) ≥ 2 and 3 ≤ |H| ≤ h_max (≤ 8): checks
/// e(H) − 2|H| against the class caps, equality for h ≥ 6 only at
/// K_2 ∇ (h−2)K_1, and e(H) ≤ max{h+2, 2h−3} for h ≥ 6.
Report verify_eta_table(int h_max, const EnumOptions& opts = {});

/// Exhaustive check of the P_{k+1}-free connected edge bound and its
/// extremal graphs for k ∈ ks and k < n ≤ n_max.
Report verify_balister(int n_max, const std::vector<int>& ks, const EnumOptions& opts = {});

/// For all connected graphs with n ≤ n_max: a dominating structure exists
/// iff there is no induced P_6.
Report verify_dominating(int n_max, const EnumOptions& opts = {});

/// Extremal spectral search over connected graphs with m edges avoiding
/// `forbidden`, compared with 1+√(m−2) (recorded, not asserted).
Report extremal_report(int m, const std::vector<Forbidden>& forbidden, const EnumOptions& opts = {});

} // namespace sturan
