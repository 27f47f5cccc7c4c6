#include "oracles.hpp"

#include "sturan/connectivity.hpp"
#include "sturan/enumerate.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph_io.hpp"
#include "sturan/subgraph.hpp"

#include <doctest.h>

#include <random>

using namespace sturan;

namespace {

Graph named(FamilySpec spec)
{
    return construct(spec);
}

} // namespace

TEST_SUITE("containment")
{
    TEST_CASE("examples")
    {
        const auto k4 = named(FamilySpec::complete(4));
        const auto c4 = named(FamilySpec::cycle(4));
        const auto w = contains_subgraph(k4, c4);
        REQUIRE(w.has_value());
        CHECK(verify_witness(k4, c4, *w));
        CHECK(w->mapping == std::vector<int>{0, 1, 2, 3});
        CHECK_FALSE(contains_subgraph(k4, c4, Containment::Induced).has_value());
        CHECK_FALSE(contains_subgraph(named(FamilySpec::join_clique_indep(3, 8)), named(FamilySpec::cycle_triangle(6)))
                        .has_value());
        CHECK_FALSE(contains_subgraph(named(FamilySpec::path(3)), k4).has_value());
    }

    TEST_CASE("witness is lexicographically least")
    {
        // Triangle {2,3,4} plus a path 0-1-2: the least embedding of K_3
        // must use the triangle in increasing order.
        const auto host = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
        const auto w = contains_subgraph(host, named(FamilySpec::complete(3)));
        REQUIRE(w);
        CHECK(w->mapping == std::vector<int>{2, 3, 4});
    }

    TEST_CASE("agrees with brute force on random hosts and patterns")
    {
        std::mt19937_64 rng(31);
        const std::vector<Graph> patterns{named(FamilySpec::cycle(4)),  named(FamilySpec::path(4)),
                                          named(FamilySpec::complete(4)), named(FamilySpec::cycle_triangle(4)),
                                          named(FamilySpec::complete_bipartite(2, 3)), named(FamilySpec::cycle(5)),
                                          named(FamilySpec::path(6))};
        for (int i = 0; i < 80; ++i) {
            const auto host = oracle::random_connected(rng, 5 + i % 4, 0.3);
            const auto h = oracle::to_matrix(host);
            for (const auto& p : patterns)
                for (auto mode : {Containment::Subgraph, Containment::Induced}) {
                    const auto w = contains_subgraph(host, p, mode);
                    CHECK(w.has_value() == oracle::brute_contains(h, oracle::to_matrix(p), mode == Containment::Induced));
                    if (w)
                        CHECK(verify_witness(host, p, *w));
                }
        }
    }

    TEST_CASE("verify_witness rejects bad maps")
    {
        const auto host = named(FamilySpec::path(4));
        const auto p = named(FamilySpec::path(3));
        CHECK(verify_witness(host, p, Witness{{0, 1, 2}, Containment::Subgraph}));
        CHECK_FALSE(verify_witness(host, p, Witness{{0, 2, 1}, Containment::Subgraph}));
        CHECK_FALSE(verify_witness(host, p, Witness{{0, 1, 1}, Containment::Subgraph}));
        CHECK_FALSE(verify_witness(host, p, Witness{{0, 1}, Containment::Subgraph}));
        const auto tri = named(FamilySpec::complete(3));
        CHECK_FALSE(verify_witness(tri, p, Witness{{0, 1, 2}, Containment::Induced}));
    }

    TEST_CASE("freeness is inherited by subgraphs")
    {
        std::mt19937_64 rng(37);
        const auto pattern = named(FamilySpec::cycle(5));
        int checked = 0;
        for (int i = 0; i < 200 && checked < 40; ++i) {
            auto g = oracle::random_connected(rng, 8, 0.15);
            if (contains_subgraph(g, pattern))
                continue;
            ++checked;
            auto edges = g.edges();
            std::shuffle(edges.begin(), edges.end(), rng);
            for (std::size_t j = 0; j < edges.size() / 2; ++j) {
                g.remove_edge(edges[j].first, edges[j].second);
                CHECK_FALSE(contains_subgraph(g, pattern).has_value());
            }
        }
        CHECK(checked > 0);
    }
}

TEST_SUITE("cycles")
{
    TEST_CASE("examples")
    {
        const auto j = named(FamilySpec::join_clique_indep(3, 8));
        for (int t = 3; t <= 6; ++t)
            CHECK(has_cycle(j, t));
        CHECK_FALSE(has_cycle(j, 7));
        const auto c6 = named(FamilySpec::cycle(6));
        for (int t = 3; t <= 6; ++t)
            CHECK(has_cycle(c6, t) == (t == 6));
        const auto ct = named(FamilySpec::cycle_triangle(6));
        for (int t = 3; t <= 7; ++t)
            CHECK(has_cycle(ct, t) == (t == 3 || t == 6 || t == 7));
        CHECK_THROWS_AS(has_cycle(c6, 2), InvalidParameter);
        CHECK_THROWS_AS(has_cycle(c6, 7), InvalidParameter);
    }

    TEST_CASE("agrees with brute force")
    {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 80; ++i) {
            const int n = 4 + i % 6;
            const auto g = oracle::random_connected(rng, n, 0.2);
            const auto a = oracle::to_matrix(g);
            for (int t = 3; t <= n; ++t)
                CHECK(has_cycle(g, t) == oracle::brute_has_cycle(a, t));
        }
    }

    TEST_CASE("C_7 search on the large certificate graph is fast and negative")
    {
        const auto g = named(FamilySpec::join_clique_indep(3, 99));
        CHECK(g.order() == 102);
        CHECK_FALSE(has_cycle(g, 7));
        CHECK(has_cycle(g, 6));
        CHECK_FALSE(has_c_triangle(g, 6));
        CHECK(has_c_triangle(g, 5));
    }
}

TEST_SUITE("cycle plus triangle")
{
    TEST_CASE("examples")
    {
        CHECK(has_c_triangle(named(FamilySpec::complete(5)), 4));
        for (int s = 3; s <= 20; ++s)
            CHECK_FALSE(has_c_triangle(named(FamilySpec::join_clique_indep(3, s)), 6));
        CHECK_FALSE(has_c_triangle(named(FamilySpec::cycle(7)), 6));
        CHECK(has_c_triangle(named(FamilySpec::cycle_triangle(6)), 6));
        CHECK_FALSE(has_c_triangle(named(FamilySpec::cycle(6)), 6)); // pattern larger than host
        CHECK_THROWS_AS(has_c_triangle(named(FamilySpec::cycle(6)), 2), InvalidParameter);
    }

    TEST_CASE("matches the generic embedder and implies both cycles")
    {
        std::mt19937_64 rng(43);
        for (int i = 0; i < 120; ++i) {
            const int n = 5 + i % 5;
            const auto g = oracle::random_connected(rng, n, 0.25);
            for (int t = 3; t <= n - 1; ++t) {
                const bool fast = has_c_triangle(g, t);
                CHECK(fast == contains_subgraph(g, named(FamilySpec::cycle_triangle(t))).has_value());
                if (fast) {
                    CHECK(has_cycle(g, t));
                    CHECK(has_cycle(g, t + 1));
                }
            }
        }
    }
}

TEST_SUITE("paths")
{
    TEST_CASE("examples")
    {
        CHECK(longest_path_order(named(FamilySpec::path(6))) == 6);
        CHECK(longest_path_order(named(FamilySpec::join_clique_indep(2, 6))) == 5);
        CHECK(longest_path_order(named(FamilySpec::gnks(10, 5, 2))) == 5);
        CHECK(longest_path_order(Graph(1)) == 1);
        CHECK(longest_path_order(Graph(0)) == 0);
        CHECK(longest_path_order(named(FamilySpec::cycle(6))) == 6);
        CHECK_THROWS_AS(longest_path_order(Graph(17)), CapacityExceeded);
    }

    TEST_CASE("agrees with brute force and with has_path")
    {
        std::mt19937_64 rng(47);
        for (int i = 0; i < 80; ++i) {
            const auto g = oracle::random_connected(rng, 3 + i % 8, 0.1);
            const int longest = longest_path_order(g);
            CHECK(longest == oracle::brute_longest_path(oracle::to_matrix(g)));
            CHECK(has_path(g, longest));
            CHECK_FALSE(has_path(g, longest + 1));
        }
    }
}

TEST_SUITE("dominating structure")
{
    TEST_CASE("examples")
    {
        const auto star = named(FamilySpec::complete_bipartite(1, 5));
        const auto c = dominating_structure(star);
        REQUIRE(c);
        CHECK(c->kind == DominationCertificate::Kind::CompleteBipartite);
        CHECK(c->part_a == std::vector<int>{0});
        CHECK(c->dominating);
        CHECK(verify_certificate(star, *c));

        const auto c6 = named(FamilySpec::cycle(6));
        const auto d = dominating_structure(c6);
        REQUIRE(d);
        CHECK(d->kind == DominationCertificate::Kind::InducedC6);
        CHECK(verify_certificate(c6, *d));

        const auto p6 = named(FamilySpec::path(6));
        CHECK_FALSE(dominating_structure(p6).has_value());
        CHECK(contains_subgraph(p6, p6, Containment::Induced).has_value());

        const auto k1 = dominating_structure(Graph(1));
        REQUIRE(k1);
        CHECK(verify_certificate(Graph(1), *k1));
        CHECK_THROWS_AS(dominating_structure(Graph(2)), PreconditionError);
        CHECK_THROWS_AS(dominating_structure(named(FamilySpec::path(21))), CapacityExceeded);
    }

    TEST_CASE("a graph can be dominated and still hold an induced P6")
    {
        // P_6 plus a universal vertex: the star at the apex dominates, yet
        // P_6 remains induced, so only the hereditary statement is an iff.
        const auto g = join(named(FamilySpec::complete(1)), named(FamilySpec::path(6)));
        CHECK(dominating_structure(g).has_value());
        CHECK(contains_subgraph(g, named(FamilySpec::path(6)), Containment::Induced).has_value());
    }

    TEST_CASE("certificate rejections")
    {
        const auto p4 = named(FamilySpec::path(4));
        DominationCertificate bad;
        bad.kind = DominationCertificate::Kind::CompleteBipartite;
        bad.part_a = {0};
        bad.part_b = {1};
        CHECK_FALSE(verify_certificate(p4, bad)); // does not dominate vertex 3
        bad.part_a = {0};
        bad.part_b = {2};
        CHECK_FALSE(verify_certificate(p4, bad)); // 0-2 is not an edge
        bad.part_a = {1};
        bad.part_b = {2};
        CHECK(verify_certificate(p4, bad));
    }

    TEST_CASE("existence matches brute force on every connected graph up to seven vertices")
    {
        for (int n = 2; n <= 7; ++n) {
            bool agree = true;
            enumerate_graphs(EnumSpec::order(n), [&](const Graph& g) {
                const auto c = dominating_structure(g);
                agree = agree && c.has_value() == oracle::brute_dominating_structure(oracle::to_matrix(g));
                if (c)
                    agree = agree && verify_certificate(g, *c);
            });
            CHECK(agree);
        }
    }

    TEST_CASE("no certificate implies an induced P6")
    {
        const auto p6 = named(FamilySpec::path(6));
        for (int n = 2; n <= 8; ++n) {
            bool ok = true;
            enumerate_graphs(EnumSpec::order(n), [&](const Graph& g) {
                if (!dominating_structure(g))
                    ok = ok && contains_subgraph(g, p6, Containment::Induced).has_value();
            });
            CHECK(ok);
        }
    }
}
