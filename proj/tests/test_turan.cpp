#include "oracles.hpp"

#include "sturan/canonical.hpp"
#include "sturan/connectivity.hpp"
#include "sturan/error.hpp"
#include "sturan/families.hpp"
#include "sturan/graph_io.hpp"
#include "sturan/subgraph.hpp"
#include "sturan/turan.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace sturan;

namespace {

Graph join_graph(int s)
{
    return construct(FamilySpec::join_clique_indep(3, s));
}

} // namespace

TEST_SUITE("decomposition")
{
    TEST_CASE("join family")
    {
        const auto g = join_graph(8);
        const auto d = decompose(g);
        CHECK(d.u_star == 0);
        CHECK(d.nbhd.count() == 10);
        CHECK(d.n0.empty());
        CHECK(d.w.empty());
        CHECK(d.n2.empty());
        REQUIRE(d.components_h.size() == 1);
        CHECK(is_isomorphic(g.induced(d.components_h[0]), construct(FamilySpec::join_clique_indep(2, 8))));
    }

    TEST_CASE("star and cycle")
    {
        const auto star = construct(FamilySpec::complete_bipartite(1, 5));
        const auto d = decompose(star);
        CHECK(d.u_star == 0);
        CHECK(d.n0.count() == 5);
        CHECK(d.nplus.empty());
        CHECK(d.w.empty());
        CHECK(d.components_h.empty());

        const auto c5 = construct(FamilySpec::cycle(5));
        const auto e = decompose(c5);
        CHECK(e.n0.count() == 2);
        CHECK(e.w.count() == 2);
        CHECK(e.n2 == e.w);
    }

    TEST_CASE("partition on every connected graph up to eight vertices")
    {
        for (int n = 2; n <= 8; ++n) {
            bool ok = true;
            enumerate_graphs(EnumSpec::order(n), [&](const Graph& g) {
                const auto d = decompose(g);
                const auto star = VertexSet::single(d.u_star);
                ok = ok && (d.n0 & d.nplus).empty() && (d.n0 | d.nplus) == d.nbhd;
                ok = ok && (star | d.n0 | d.nplus | d.w) == g.vertices() && !d.w.intersects(d.nbhd) &&
                     !d.w.test(d.u_star);
                ok = ok && d.n2.subset_of(d.w);
                for (int u : d.nplus)
                    ok = ok && g.degree_in(u, d.nbhd) >= 1;
                for (int u : d.n0)
                    ok = ok && g.degree_in(u, d.nbhd) == 0;
                VertexSet covered;
                for (const auto& h : d.components_h)
                    covered |= h;
                ok = ok && covered == d.nplus;
                ok = ok && d.perron.x[d.u_star] >= *std::max_element(d.perron.x.begin(), d.perron.x.end()) * (1 - 1e-9);
            });
            CHECK(ok);
        }
    }

    TEST_CASE("rejects disconnected input")
    {
        CHECK_THROWS_AS(decompose(disjoint_union(construct(FamilySpec::complete(3)), construct(FamilySpec::complete(2)))),
                        PreconditionError);
    }
}

TEST_SUITE("eta")
{
    TEST_CASE("join family equality")
    {
        for (int s = 8; s <= 20; ++s) {
            const auto g = join_graph(s);
            const auto d = decompose(g);
            REQUIRE(d.components_h.size() == 1);
            const auto e = eta(g, d, d.components_h[0]);
            CHECK(std::abs(e.value + 3.0) <= 1e-9);
            CHECK(e.upper_bound == -3);
            CHECK(e.class_label == EtaClass::Other);
        }
    }

    TEST_CASE("K_2 components are below -1")
    {
        std::mt19937_64 rng(53);
        int seen = 0;
        for (int i = 0; i < 300; ++i) {
            const auto g = oracle::random_connected(rng, 7 + i % 4, 0.15);
            const auto d = decompose(g);
            for (const auto& h : d.components_h)
                if (h.count() == 2) {
                    const auto e = eta(g, d, h);
                    double expect = -1.0;
                    for (int u : h)
                        expect -= d.ratio(u);
                    CHECK(e.value == doctest::Approx(expect).epsilon(1e-12));
                    CHECK(e.value < -1.0);
                    CHECK(e.class_label == EtaClass::K2);
                    ++seen;
                }
        }
        CHECK(seen > 0);
    }

    TEST_CASE("cycles give minus their edge count")
    {
        // u* joined to C_h: the component is the cycle itself.
        for (int h = 3; h <= 9; ++h) {
            const auto g = join(construct(FamilySpec::complete(1)), construct(FamilySpec::cycle(h)));
            const auto d = decompose(g);
            REQUIRE(d.components_h.size() == 1);
            CHECK(std::abs(eta(g, d, d.components_h[0]).value + h) < 1e-12);
        }
    }

    TEST_CASE("value respects the bound when the minimum degree is at least two")
    {
        std::mt19937_64 rng(59);
        for (int i = 0; i < 300; ++i) {
            const auto g = oracle::random_connected(rng, 6 + i % 6, 0.4);
            const auto d = decompose(g);
            for (const auto& h : d.components_h) {
                const auto e = eta(g, d, h);
                if (e.min_degree >= 2)
                    CHECK(e.value <= e.upper_bound + 1e-9);
            }
        }
    }

    TEST_CASE("classification")
    {
        auto k5 = construct(FamilySpec::complete(5));
        CHECK(classify_eta(k5) == EtaClass::K5);
        k5.remove_edge(1, 3);
        CHECK(classify_eta(k5) == EtaClass::K5MinusE);
        k5.remove_edge(2, 4);
        CHECK(classify_eta(k5) == EtaClass::K5Minus2E);
        auto k5b = construct(FamilySpec::complete(5));
        k5b.remove_edge(0, 1);
        k5b.remove_edge(0, 2);
        CHECK(classify_eta(k5b) == EtaClass::K5Minus2E);
        CHECK(classify_eta(construct(FamilySpec::complete(4))) == EtaClass::K4);
        CHECK(classify_eta(construct(FamilySpec::complete(2))) == EtaClass::K2);
        CHECK(classify_eta(construct(FamilySpec::cycle(5))) == EtaClass::Other);
        CHECK(eta_class_cap(EtaClass::K5) == 0);
        CHECK(eta_class_cap(EtaClass::K5MinusE) == -1);
        CHECK(eta_class_cap(EtaClass::K4) == -2);
        CHECK(eta_class_cap(EtaClass::K5Minus2E) == -2);
        CHECK(eta_class_cap(EtaClass::Other) == -3);
        CHECK(eta_class_name(EtaClass::K5MinusE) == "K5-e");
    }

    TEST_CASE("hypothetical K_4 cap")
    {
        // u* joined to K_4 (i.e. K_5): inside N(u*) every ratio is 1.
        const auto g = construct(FamilySpec::complete(5));
        const auto d = decompose(g);
        REQUIRE(d.components_h.size() == 1);
        const auto e = eta(g, d, d.components_h[0]);
        CHECK(e.upper_bound == 6 - 8);
        CHECK(e.class_label == EtaClass::K4);
        CHECK(std::abs(e.value - e.upper_bound) < 1e-9);
    }

    TEST_CASE("rejects sets that are not components")
    {
        const auto g = join_graph(4);
        const auto d = decompose(g);
        CHECK_THROWS_AS(eta(g, d, VertexSet::range(2)), PreconditionError);
    }
}

TEST_SUITE("neighbourhood inequality")
{
    TEST_CASE("equality on the join family")
    {
        for (int s = 8; s <= 20; ++s) {
            const auto g = join_graph(s);
            CHECK(std::abs(eq4_slack(g)) <= 1e-8);
            const auto t = eq4_terms(g, decompose(g));
            CHECK(t.hypothesis);
            CHECK(t.e_w == 0);
            CHECK(std::abs(t.eta_sum + 3.0) <= 1e-9);
            CHECK(t.n0_weight == 0.0);
        }
    }

    TEST_CASE("hypothesis violation is reported")
    {
        CHECK_THROWS_AS(eq4_slack(construct(FamilySpec::path(6))), HypothesisViolated);
        CHECK_THROWS_AS(eq4_slack(construct(FamilySpec::cycle(8))), HypothesisViolated);
        const auto t = eq4_terms(construct(FamilySpec::path(6)), decompose(construct(FamilySpec::path(6))));
        CHECK_FALSE(t.hypothesis);
    }

    TEST_CASE("slack is non-negative on qualifying C_6^triangle-free graphs")
    {
        // Every connected C_6^△-free graph with at most 11 edges meeting the
        // λ threshold; the derivation of the inequality needs only that.
        for (int m = 4; m <= 11; ++m) {
            auto spec = EnumSpec::edges(m);
            spec.forbidden = {Forbidden::cycle_triangle(6)};
            for (const auto& r : enumerate_records(spec)) {
                if (r.lambda < 1.0 + std::sqrt(m - 2.0) - 1e-9)
                    continue;
                const auto g = from_graph6(r.g6);
                CHECK_MESSAGE(eq4_slack(g) >= -1e-8, r.g6);
            }
        }
    }
}

TEST_SUITE("drivers")
{
    TEST_CASE("theorem certificates")
    {
        for (int m : {3, 27, 30, 300}) {
            const auto r = verify_theorem1(m, VerifyMode::Certificate);
            CHECK(r.pass);
            CHECK(r.tallies["hypothesis_met"].get<bool>() == (m >= 27));
        }
        const auto r27 = verify_theorem1(27, VerifyMode::Certificate);
        CHECK(r27.certificates[0]["lambda"].get<double>() == doctest::Approx(6.0).epsilon(1e-12));
        CHECK_THROWS_AS(verify_theorem1(28, VerifyMode::Certificate), InvalidParameter);
        CHECK_THROWS_AS(verify_theorem1(13, VerifyMode::Exhaustive), CapacityExceeded);
    }

    TEST_CASE("theorem exhaustive at m = 9 records without asserting")
    {
        const auto r = verify_theorem1(9, VerifyMode::Exhaustive);
        CHECK(r.pass);
        CHECK_FALSE(r.tallies["asserted"].get<bool>());
        CHECK_FALSE(r.tallies["hypothesis_met"].get<bool>());
        CHECK(r.tallies.contains("bound_holds"));
        CHECK(r.tallies.contains("extremal_is_join"));
        CHECK(r.certificates.size() >= 1);
    }

    TEST_CASE("corollary")
    {
        const auto c = verify_corollary(27, VerifyMode::Certificate);
        CHECK(c.pass);
        CHECK(c.certificates[0]["cycles"] == nlohmann::json({3, 4, 5, 6}));
        const auto e = verify_corollary(3, VerifyMode::Exhaustive);
        CHECK(e.pass);
        CHECK(e.tallies["qualifying"].get<int>() == 1);
        CHECK(e.certificates[0]["cycles"] == nlohmann::json({3}));
    }

    TEST_CASE("eta table")
    {
        const auto r = verify_eta_table(8);
        CHECK(r.pass);
        CHECK(r.certificates.empty());
        CHECK(r.tallies["5"]["max_bound"].get<int>() == 0);
        CHECK(r.tallies["6"]["equality_count"].get<int>() == 1);
        CHECK_THROWS_AS(verify_eta_table(9), InvalidParameter);
        CHECK_THROWS_AS(verify_eta_table(2), InvalidParameter);
    }

    TEST_CASE("eta table family excludes graphs with a P6 subgraph")
    {
        CHECK(longest_path_order(construct(FamilySpec::cycle(6))) == 6);
        CHECK(Forbidden::path(6).found_in(construct(FamilySpec::cycle(6))));
    }

    TEST_CASE("balister and dominating drivers")
    {
        CHECK(verify_balister(7, {3, 4}).pass);
        const auto d = verify_dominating(7);
        CHECK(d.pass);
        CHECK(d.tallies["7"]["graphs"].get<int>() == 853);
    }

    TEST_CASE("report json is stable")
    {
        const auto a = verify_theorem1(30, VerifyMode::Certificate).to_json().dump();
        const auto b = verify_theorem1(30, VerifyMode::Certificate).to_json().dump();
        CHECK(a == b);
        CHECK(a.find("\"runtime_ms\":null") != std::string::npos);
    }
}
