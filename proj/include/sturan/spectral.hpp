#pragma once

#include "sturan/graph.hpp"

#include <vector>

namespace sturan {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kDefaultIterationCap = 1'000'000;

struct SpectralOptions
{
    double tol = kDefaultTolerance;
    long max_iterations = kDefaultIterationCap;
};

struct SpectralResult
{
    /// Rayleigh quotient of the final iterate.
    double lambda = 0.0;
    /// Unit Euclidean norm; strictly positive for connected graphs with an edge.
    std::vector<double> x;
    /// max_v |(A x)_v − λ x_v|.
    double residual = 0.0;
    long iterations = 0;

    /// Vertex with the largest entry; entries within 1e-9·max of the
    /// maximum count as ties and the lowest index wins.
    int extremal_vertex() const;
};

/// Perron pair of a connected graph with at least one edge, by power
/// iteration on A + I from the all-ones vector. Stops once the eigen
/// residual is at most `tol`.
///
/// Throws PreconditionError for disconnected or edgeless input and
/// ConvergenceError when the iteration cap is reached.
SpectralResult perron_vector(const Graph& g, const SpectralOptions& opts = {});

/// Largest adjacency eigenvalue: the maximum of the Perron values of the
/// connected components (isolated vertices contribute 0).
double spectral_radius(const Graph& g, const SpectralOptions& opts = {});

/// Larger root of λ² − (k−1)λ − ks = 0, the spectral radius of K_k ∇ sK_1.
double join_lambda_closed_form(int k, int s);

/// Exact integer coefficients of det(λI − A), highest degree first
/// (division-free Berkowitz recurrence). Requires n ≤ 12.
std::vector<long long> characteristic_polynomial(const Graph& g);

/// Largest real root of the characteristic polynomial by bisection. Since the
/// polynomial is real-rooted, x exceeds the largest root exactly when every
/// derivative is positive at x, which gives a monotone bisection predicate
/// that is correct even for repeated roots, though a repeated root costs
/// precision, so disconnected graphs are split into components. Requires n ≤ 12.
double char_poly_radius_oracle(const Graph& g);

struct EigenResiduals
{
    /// |λ x_v − Σ_{u∈N(v)} x_u|
    double r1 = 0.0;
    /// |λ² x_v − (d(v) x_v + Σ_{u∈N+(v)} d_{N(v)}(u) x_u + Σ_{w∈N²(v)} d_{N(v)}(w) x_w)|
    double r2 = 0.0;
};

/// Evaluates the one- and two-step eigen-equations at v for a Perron pair.
EigenResiduals eigen_identity_check(const Graph& g, const SpectralResult& perron, int v);
/// Same, computing the Perron pair first.
EigenResiduals eigen_identity_check(const Graph& g, int v, const SpectralOptions& opts = {});

} // namespace sturan
