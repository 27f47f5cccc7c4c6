#include "oracles.hpp"

#include "sturan/connectivity.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sturan;

TEST_SUITE("spectral radius")
{
    TEST_CASE("closed-form families")
    {
        for (int n = 2; n <= 8; ++n)
            CHECK(spectral_radius(construct(FamilySpec::complete(n))) == doctest::Approx(n - 1).epsilon(1e-12));
        for (int n = 3; n <= 12; ++n)
            CHECK(spectral_radius(construct(FamilySpec::cycle(n))) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(spectral_radius(construct(FamilySpec::complete_bipartite(2, 3))) ==
              doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
        CHECK(std::abs(spectral_radius(construct(FamilySpec::join_clique_indep(3, 8))) - 6.0) < 1e-10);
        CHECK(spectral_radius(Graph(3)) == 0.0);
        CHECK(spectral_radius(Graph(0)) == 0.0);
    }

    TEST_CASE("agrees with a Jacobi eigensolver on random graphs")
    {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 60; ++i) {
            const auto g = oracle::random_connected(rng, 3 + i % 12, 0.2);
            CHECK(std::abs(spectral_radius(g) - oracle::jacobi_radius(oracle::to_matrix(g))) < 1e-9);
        }
    }

    TEST_CASE("component maximum")
    {
        std::mt19937_64 rng(4);
        for (int i = 0; i < 30; ++i) {
            const auto a = oracle::random_connected(rng, 3 + i % 6, 0.3);
            const auto b = oracle::random_connected(rng, 2 + i % 9, 0.2);
            CHECK(std::abs(spectral_radius(disjoint_union(a, b)) -
                           std::max(spectral_radius(a), spectral_radius(b))) < 1e-9);
        }
    }

    TEST_CASE("adding an edge strictly increases the radius")
    {
        std::mt19937_64 rng(8);
        int tested = 0;
        while (tested < 200) {
            const int n = 3 + static_cast<int>(rng() % 8);
            auto g = oracle::random_connected(rng, n, 0.15);
            std::vector<Edge> missing;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v))
                        missing.push_back({u, v});
            if (missing.empty())
                continue;
            const double before = spectral_radius(g);
            const auto [u, v] = missing[rng() % missing.size()];
            g.add_edge(u, v);
            CHECK(spectral_radius(g) > before + 1e-9);
            ++tested;
        }
    }

    TEST_CASE("average degree lower bound")
    {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 50; ++i) {
            const auto g = oracle::random_connected(rng, 2 + i % 11, 0.3);
            CHECK(spectral_radius(g) >= 2.0 * g.size() / g.order() - 1e-12);
        }
    }

    TEST_CASE("equality certificates of the join family")
    {
        for (int m = 27; m <= 300; m += 3) {
            const auto g = construct(FamilySpec::join_clique_indep(3, (m - 3) / 3));
            CHECK(std::abs(spectral_radius(g) - (1.0 + std::sqrt(m - 2.0))) <= 1e-9);
        }
    }

    TEST_CASE("tolerance validation and iteration cap")
    {
        const auto g = construct(FamilySpec::path(6));
        SpectralOptions bad;
        bad.tol = 0.0;
        CHECK_THROWS_AS(perron_vector(g, bad), InvalidParameter);
        SpectralOptions tight;
        tight.max_iterations = 2;
        CHECK_THROWS_AS(perron_vector(g, tight), ConvergenceError);
    }
}

TEST_SUITE("perron vector")
{
    TEST_CASE("examples")
    {
        const auto star = perron_vector(construct(FamilySpec::complete_bipartite(1, 4)));
        CHECK(star.lambda == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(star.x[0] / star.x[1] == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(star.extremal_vertex() == 0);

        const auto j = perron_vector(construct(FamilySpec::join_clique_indep(3, 8)));
        CHECK(std::abs(j.x[0] - j.x[2]) < 1e-12);
        CHECK(std::abs(j.x[3] - j.x[10]) < 1e-12);
        CHECK(j.x[0] / j.x[3] == doctest::Approx(2.0).epsilon(1e-10));

        const auto c5 = perron_vector(construct(FamilySpec::cycle(5)));
        for (double v : c5.x)
            CHECK(v == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-10));
        CHECK(c5.extremal_vertex() == 0);
    }

    TEST_CASE("invariants on random connected graphs")
    {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 100; ++i) {
            const auto g = oracle::random_connected(rng, 2 + i % 15, 0.2);
            const auto p = perron_vector(g);
            CHECK(p.residual <= kDefaultTolerance);
            double norm = 0.0;
            bool positive = true;
            for (double v : p.x) {
                norm += v * v;
                positive = positive && v > 0.0;
            }
            CHECK(positive);
            CHECK(std::abs(norm - 1.0) < 1e-12);
            const int u = p.extremal_vertex();
            for (int v = 0; v < u; ++v)
                CHECK(p.x[v] < p.x[u] * (1 - 1e-9));
        }
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(perron_vector(Graph(3)), PreconditionError);
        CHECK_THROWS_AS(perron_vector(disjoint_union(construct(FamilySpec::complete(2)),
                                                     construct(FamilySpec::complete(2)))),
                        PreconditionError);
    }
}

TEST_SUITE("closed form")
{
    TEST_CASE("examples")
    {
        CHECK(join_lambda_closed_form(3, 8) == doctest::Approx(6.0).epsilon(1e-14));
        const double expect = (1.0 + std::sqrt(41.0)) / 2.0;
        CHECK(join_lambda_closed_form(2, 5) == doctest::Approx(expect).epsilon(1e-14));
        CHECK(expect == doctest::Approx((1.0 + std::sqrt(4.0 * 11 - 4 + 1)) / 2.0).epsilon(1e-14));
        for (int t = 0; t <= 20; ++t)
            CHECK(join_lambda_closed_form(1, t) == doctest::Approx(std::sqrt(t)).epsilon(1e-14));
    }

    TEST_CASE("root of the quadratic and agreement with the eigensolver")
    {
        for (int k = 1; k <= 6; ++k)
            for (int s = 0; s <= 100; ++s) {
                const double l = join_lambda_closed_form(k, s);
                CHECK(std::abs(l * l - (k - 1) * l - k * s) <= 1e-12 * std::max(1.0, l * l));
                const long long m = k * (k - 1) / 2 + static_cast<long long>(k) * s;
                CHECK(l == doctest::Approx((k - 1 + std::sqrt(4.0 * m - k * k + 1)) / 2.0).epsilon(1e-12));
                if (s % 10 == 1 && k + s >= 2)
                    CHECK(std::abs(spectral_radius(construct(FamilySpec::join_clique_indep(k, s))) - l) < 1e-9);
            }
    }
}

TEST_SUITE("characteristic polynomial")
{
    TEST_CASE("small coefficients")
    {
        // P_3: x^3 - 2x
        CHECK(characteristic_polynomial(construct(FamilySpec::path(3))) == std::vector<long long>{1, 0, -2, 0});
        // K_3: x^3 - 3x - 2
        CHECK(characteristic_polynomial(construct(FamilySpec::complete(3))) == std::vector<long long>{1, 0, -3, -2});
        // C_4: x^4 - 4x^2
        CHECK(characteristic_polynomial(construct(FamilySpec::cycle(4))) ==
              std::vector<long long>{1, 0, -4, 0, 0});
        CHECK_THROWS_AS(characteristic_polynomial(Graph(13)), CapacityExceeded);
    }

    TEST_CASE("oracle examples")
    {
        CHECK(std::abs(char_poly_radius_oracle(construct(FamilySpec::path(3))) - std::sqrt(2.0)) < 1e-10);
        CHECK(std::abs(char_poly_radius_oracle(construct(FamilySpec::complete(4))) - 3.0) < 1e-10);
        // Repeated largest root: 2K_3 has eigenvalue 2 twice.
        const auto two_triangles =
            disjoint_union(construct(FamilySpec::complete(3)), construct(FamilySpec::complete(3)));
        CHECK(std::abs(char_poly_radius_oracle(two_triangles) - 2.0) < 1e-10);
        CHECK(char_poly_radius_oracle(Graph(4)) == doctest::Approx(0.0));
    }

    TEST_CASE("oracle agrees with Jacobi on random graphs up to 12 vertices")
    {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 60; ++i) {
            const auto g = oracle::random_connected(rng, 2 + i % 11, 0.35);
            CHECK(std::abs(char_poly_radius_oracle(g) - oracle::jacobi_radius(oracle::to_matrix(g))) < 1e-9);
        }
    }

    TEST_CASE("power iteration meets the oracle on every connected graph up to six vertices")
    {
        for (int n = 2; n <= 6; ++n) {
            auto spec = EnumSpec::order(n);
            double worst = 0.0;
            enumerate_graphs(spec, [&](const Graph& g) {
                worst = std::max(worst, std::abs(spectral_radius(g) - char_poly_radius_oracle(g)));
            });
            CHECK(worst <= 1e-8);
        }
    }
}

TEST_SUITE("eigen identities")
{
    TEST_CASE("named graphs")
    {
        const auto j = construct(FamilySpec::join_clique_indep(3, 8));
        const auto p = perron_vector(j);
        const auto r = eigen_identity_check(j, p, p.extremal_vertex());
        CHECK(r.r1 <= 10 * kDefaultTolerance);
        CHECK(r.r2 <= 1e-8);
        const auto c6 = construct(FamilySpec::cycle(6));
        for (int v = 0; v < 6; ++v) {
            const auto e = eigen_identity_check(c6, v);
            CHECK(e.r1 <= 10 * kDefaultTolerance);
            CHECK(e.r2 <= 1e-8);
        }
    }

    TEST_CASE("every vertex of random connected graphs")
    {
        std::mt19937_64 rng(19);
        for (int i = 0; i < 50; ++i) {
            const auto g = oracle::random_connected(rng, 2 + i % 11, 0.3);
            const auto p = perron_vector(g);
            for (int v = 0; v < g.order(); ++v) {
                const auto e = eigen_identity_check(g, p, v);
                CHECK(e.r1 <= 10 * kDefaultTolerance);
                CHECK(e.r2 <= 1e-8);
            }
        }
    }

    TEST_CASE("second-step identity against a direct A^2 evaluation")
    {
        std::mt19937_64 rng(23);
        for (int i = 0; i < 20; ++i) {
            const auto g = oracle::random_connected(rng, 8, 0.3);
            const auto p = perron_vector(g);
            const auto a = oracle::to_matrix(g);
            for (int v = 0; v < 8; ++v) {
                double walks = 0.0;
                for (int u = 0; u < 8; ++u)
                    for (int w = 0; w < 8; ++w)
                        walks += a[v][u] * a[u][w] * p.x[w];
                CHECK(std::abs(walks - p.lambda * p.lambda * p.x[v]) < 1e-9);
            }
        }
    }

    TEST_CASE("requires a connected graph")
    {
        CHECK_THROWS_AS(eigen_identity_check(Graph(2), 0), PreconditionError);
    }
}
