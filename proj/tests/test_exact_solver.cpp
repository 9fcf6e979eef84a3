#include <doctest.h>

#include "oracles.hpp"
#include "ttone/error.hpp"
#include "ttone/exact_solver.hpp"
#include "ttone/generators.hpp"
#include "ttone/greedy_bounds.hpp"

using namespace ttone;

namespace {

unsigned tau(const Graph& g, unsigned t, unsigned kmax = 30) {
    const auto r = exact_tau(g, t, kmax);
    REQUIRE(r.status == TauStatus::Exact);
    REQUIRE(r.witness);
    CHECK(r.witness->is_total());
    CHECK(verify_coloring(g, *r.witness).empty());
    return r.value;
}

LabelFamily family(std::initializer_list<Label> ls) { return LabelFamily(ls); }

}  // namespace

TEST_CASE("find_coloring examples") {
    const auto k2 = gen::complete(2);
    CHECK(find_coloring(k2, 2, 3).status == SearchStatus::Absent);
    const auto yes = find_coloring(k2, 2, 4);
    REQUIRE(yes.status == SearchStatus::Found);
    CHECK(verify_coloring(k2, *yes.coloring).empty());
    CHECK(find_coloring(k2, 3, 2).status == SearchStatus::Absent);
    CHECK(find_coloring(gen::empty(0), 2, 2).status == SearchStatus::Found);
    CHECK_THROWS_AS(find_coloring(k2, 2, 65), Error);
    CHECK_THROWS_AS(find_coloring(k2, 3, 64), Error);
}

TEST_CASE("first vertex gets the label 1..t") {
    const auto r = find_coloring(gen::petersen(), 2, 5);
    REQUIRE(r.coloring);
    bool saw = false;
    for (Vertex v = 0; v < 10; ++v) saw |= r.coloring->label(v) == Label{1, 2};
    CHECK(saw);
    CHECK(find_coloring(gen::cycle(4), 2, 5).stats.symmetry_prunes > 0);
}

TEST_CASE("exact values") {
    CHECK(tau(gen::path(3), 2) == 5);
    CHECK(tau(gen::cycle(4), 2) == 6);
    CHECK(tau(gen::petersen(), 2) == 5);
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned t = 1; t <= 3; ++t) CHECK(tau(gen::complete(n), t) == t * n);
    for (std::size_t k = 1; k <= 6; ++k) CHECK(tau(gen::star(k), 2) == tree_tau2(k));
    CHECK(tau(gen::empty(4), 3) == 3);
}

TEST_CASE("exact_tau statuses") {
    const auto r = exact_tau(gen::cycle(4), 2, 5);
    CHECK(r.status == TauStatus::AboveCap);
    CHECK(!r.witness);
    CHECK(r.stats.nodes > 0);

    SearchOptions quick;
    quick.timeout = std::chrono::duration<double>(1e-9);
    const auto h = find_coloring(gen::heawood(), 2, 6, quick);
    CHECK(h.status == SearchStatus::Timeout);
    const auto ht = exact_tau(gen::heawood(), 2, 7, quick);
    CHECK(ht.status == TauStatus::Timeout);
}

TEST_CASE("pruned search agrees with plain enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 3 + seed % 4;
        const auto g = oracle::random_gnp(n, 0.5, seed);
        for (unsigned k = 2; k <= 6; ++k) {
            const bool expected = oracle::naive_colorable(g, 2, k);
            CHECK((find_coloring(g, 2, k).status == SearchStatus::Found) == expected);
            SearchOptions no_symmetry;
            no_symmetry.symmetry_breaking = false;
            const auto plain = find_coloring(g, 2, k, no_symmetry);
            CHECK((plain.status == SearchStatus::Found) == expected);
            CHECK(plain.stats.symmetry_prunes == 0);
        }
    }
}

TEST_CASE("t = 1 is proper coloring of the graph") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_gnp(7, 0.4, seed);
        CHECK(tau(g, 1) == oracle::naive_tau(g, 1, 8));
    }
}

TEST_CASE("monotone in t and under subgraphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = oracle::random_gnp(6, 0.35, seed);
        const auto t1 = tau(g, 1), t2 = tau(g, 2), t3 = tau(g, 3);
        CHECK(t1 <= t2);
        CHECK(t2 <= t3);
        const auto edges = g.edges();
        if (!edges.empty()) CHECK(tau(without_edge(g, edges[seed % edges.size()]), 2) <= t2);
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.order(); ++v)
            if (v != seed % g.order()) keep.push_back(v);
        CHECK(tau(induced_subgraph(g, keep), 2) <= t2);
    }
}

TEST_CASE("exact value never exceeds a constructive coloring") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = gen::random_family({gen::RandomKind::MaxDegree, 8 + seed % 5, 3, 0, seed});
        const auto greedy = color_2tone_greedy(g);
        CHECK(tau(g, 2) <= greedy.report.used);
    }
}

TEST_CASE("label family predicates") {
    CHECK(has_complementary_pair(family({{1, 2}, {3, 4}, {1, 3}, {2, 4}})));
    CHECK(has_complementary_pair(family({{1, 2}, {3, 4}, {1, 4}, {2, 3}})));
    CHECK_FALSE(has_complementary_pair(family({{1, 2}, {3, 4}, {1, 3}})));
    CHECK_FALSE(has_complementary_pair(family({{1, 2}, {1, 3}, {1, 4}})));
    CHECK(has_disjoint_triple(family({{1, 2}, {3, 4}, {5, 6}})));
    CHECK_FALSE(has_disjoint_triple(family({{1, 2}, {3, 4}, {4, 5}})));
    CHECK_FALSE(has_disjoint_triple(family({{1, 2}, {3, 4}})));
    CHECK_FALSE(has_disjoint_triple(family({})));
    const auto seven = family({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}});
    CHECK(has_disjoint_triple(seven));
}

TEST_CASE("seven-label claim") {
    const auto r = check_seven_label_claim();
    CHECK(r.families_checked == 6435);
    CHECK(r.holds());
    // Six labels are not enough: the star at 1 plus 23 has neither pattern.
    CHECK_FALSE(has_complementary_pair(family({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}})));
    CHECK_FALSE(has_disjoint_triple(family({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}})));
}

TEST_CASE("heawood certificate") {
    const auto cert = heawood_tau2();
    CHECK(cert.value == 7);
    CHECK(cert.upper_violations.empty());
    CHECK(cert.lower.status == SearchStatus::Absent);
    CHECK(find_coloring(gen::heawood(), 2, 7).status == SearchStatus::Found);
}

TEST_CASE("heawood lower bound without symmetry breaking") {
    SearchOptions plain;
    plain.symmetry_breaking = false;
    CHECK(find_coloring(gen::heawood(), 2, 6, plain).status == SearchStatus::Absent);
}
