#include "sturan/spectral.hpp"

#include "sturan/connectivity.hpp"
#include "sturan/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sturan {

namespace {

constexpr int kOracleCapacity = 12;

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& out)
{
    for (int v = 0; v < g.order(); ++v) {
        double s = 0.0;
        for (int u : g.neighbors(v))
            s += x[static_cast<std::size_t>(u)];
        out[static_cast<std::size_t>(v)] = s;
    }
}

} // namespace

int SpectralResult::extremal_vertex() const
{
    if (x.empty())
        return -1;
    const double top = *std::max_element(x.begin(), x.end());
    const double cut = top - 1e-9 * top;
    for (std::size_t v = 0; v < x.size(); ++v)
        if (x[v] >= cut)
            return static_cast<int>(v);
    return 0;
}

SpectralResult perron_vector(const Graph& g, const SpectralOptions& opts)
{
    if (!(opts.tol > 0.0))
        throw InvalidParameter("perron_vector: tolerance must be positive");
    if (!is_connected(g))
        throw PreconditionError("perron_vector: graph is disconnected");
    if (g.size() == 0)
        throw PreconditionError("perron_vector: graph has no edges");

    const auto n = static_cast<std::size_t>(g.order());
    SpectralResult r;
    r.x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    for (long it = 0;; ++it) {
        multiply(g, r.x, ax);
        double lambda = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            lambda += r.x[v] * ax[v];
        double residual = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            residual = std::max(residual, std::abs(ax[v] - lambda * r.x[v]));
        r.lambda = lambda;
        r.residual = residual;
        r.iterations = it;
        if (residual <= opts.tol)
            return r;
        if (it >= opts.max_iterations)
            throw ConvergenceError("perron_vector: residual " + std::to_string(residual) +
                                   " above tolerance after " + std::to_string(it) +
                                   " iterations");
        double norm = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            ax[v] += r.x[v];
            norm += ax[v] * ax[v];
        }
        norm = std::sqrt(norm);
        for (std::size_t v = 0; v < n; ++v)
            r.x[v] = ax[v] / norm;
    }
}

double spectral_radius(const Graph& g, const SpectralOptions& opts)
{
    if (!(opts.tol > 0.0))
        throw InvalidParameter("spectral_radius: tolerance must be positive");
    double best = 0.0;
    for (const auto& c : components(g)) {
        if (c.count() < 2)
            continue;
        best = std::max(best, perron_vector(g.induced(c), opts).lambda);
    }
    return best;
}

double join_lambda_closed_form(int k, int s)
{
    if (k < 1 || s < 0)
        throw InvalidParameter("join_lambda_closed_form: requires k >= 1 and s >= 0");
    const double b = k - 1.0;
    return (b + std::sqrt(b * b + 4.0 * k * static_cast<double>(s))) / 2.0;
}

std::vector<long long> characteristic_polynomial(const Graph& g)
{
    const int n = g.order();
    if (n > kOracleCapacity)
        throw CapacityExceeded("characteristic_polynomial: order " + std::to_string(n) +
                               " exceeds " + std::to_string(kOracleCapacity));
    using Wide = __int128;
    auto a = [&](int i, int j) -> Wide { return g.has_edge(i, j) ? 1 : 0; };

    std::vector<Wide> coeff{1};
    for (int r = 0; r < n; ++r) {
        // Leading block A_r, column c = A[0..r)[r], row = A[r][0..r), corner a(r,r).
        std::vector<Wide> t{1, -a(r, r)};
        std::vector<Wide> power(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            power[static_cast<std::size_t>(i)] = a(i, r);
        for (int k = 0; k < r; ++k) {
            Wide q = 0;
            for (int i = 0; i < r; ++i)
                q += a(r, i) * power[static_cast<std::size_t>(i)];
            t.push_back(-q);
            std::vector<Wide> next(static_cast<std::size_t>(r), 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    next[static_cast<std::size_t>(i)] += a(i, j) * power[static_cast<std::size_t>(j)];
            power = std::move(next);
        }
        std::vector<Wide> grown(coeff.size() + 1, 0);
        for (std::size_t i = 0; i < grown.size(); ++i)
            for (std::size_t j = 0; j <= i && j < coeff.size(); ++j)
                grown[i] += t[i - j] * coeff[j];
        coeff = std::move(grown);
    }
    std::vector<long long> out;
    out.reserve(coeff.size());
    for (Wide c : coeff) {
        if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
            throw CapacityExceeded("characteristic_polynomial: coefficient overflow");
        out.push_back(static_cast<long long>(c));
    }
    return out;
}

double char_poly_radius_oracle(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0.0;
    if (n > 12)
        throw CapacityExceeded("char_poly_radius_oracle: order " + std::to_string(n) + " exceeds 12");
    // A repeated top root (e.g. 2K_3) makes sign bisection ill-conditioned;
    // per component the top root is simple.
    if (const auto parts = components(g); parts.size() > 1) {
        double best = 0.0;
        for (const auto& c : parts)
            best = std::max(best, char_poly_radius_oracle(g.induced(c)));
        return best;
    }
    const auto coeff = characteristic_polynomial(g);
    // derivs[j][i]: coefficient of x^(n-j-i) in the j-th derivative, highest first.
    std::vector<std::vector<long double>> derivs;
    std::vector<long double> p(coeff.begin(), coeff.end());
    for (int j = 0; j <= n; ++j) {
        derivs.push_back(p);
        std::vector<long double> d;
        const int deg = static_cast<int>(p.size()) - 1;
        for (int i = 0; i < deg; ++i)
            d.push_back(p[static_cast<std::size_t>(i)] * static_cast<long double>(deg - i));
        p = std::move(d);
    }
    auto above_all_roots = [&](long double x) {
        for (const auto& d : derivs) {
            long double acc = 0;
            for (long double c : d)
                acc = acc * x + c;
            if (!(acc > 0))
                return false;
        }
        return true;
    };
    long double lo = 0, hi = static_cast<long double>(g.max_degree()) + 1;
    for (int it = 0; it < 200 && hi - lo > 1e-16L * hi; ++it) {
        const long double mid = (lo + hi) / 2;
        (above_all_roots(mid) ? hi : lo) = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

EigenResiduals eigen_identity_check(const Graph& g, const SpectralResult& perron, int v)
{
    if (v < 0 || v >= g.order())
        throw InvalidParameter("eigen_identity_check: vertex out of range");
    const auto& x = perron.x;
    const double lambda = perron.lambda;
    const auto nv = g.neighbors(v);
    const auto at = [&](int u) { return x[static_cast<std::size_t>(u)]; };

    double one_step = 0.0;
    for (int u : nv)
        one_step += at(u);

    double two_step = g.degree(v) * at(v);
    for (int u : nv)
        if (const int d = g.degree_in(u, nv); d > 0)
            two_step += d * at(u);
    for (int w : g.second_neighbors(v))
        two_step += g.degree_in(w, nv) * at(w);

    return {std::abs(lambda * at(v) - one_step), std::abs(lambda * lambda * at(v) - two_step)};
}

EigenResiduals eigen_identity_check(const Graph& g, int v, const SpectralOptions& opts)
{
    return eigen_identity_check(g, perron_vector(g, opts), v);
}

} // namespace sturan
