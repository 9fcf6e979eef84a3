#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ttone/error.hpp"
#include "ttone/generators.hpp"
#include "ttone/graph.hpp"

using namespace ttone;

TEST_CASE("build_graph") {
    const auto k2 = build_graph(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    const auto p3 = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    CHECK_THROWS_AS(build_graph(1, {{0, 0}}), Error);
    try {
        build_graph(1, {{0, 0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidEdge);
    }
    try {
        build_graph(2, {{0, 2}});
        FAIL("expected InvalidVertex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidVertex);
    }
    CHECK(build_graph(0, {}).order() == 0);
}

TEST_CASE("vertex ordering is a permutation") {
    VertexOrdering ord({2, 0, 1});
    for (Vertex v = 0; v < 3; ++v) CHECK(ord[ord.position(v)] == v);
    CHECK(ord.reversed()[0] == 1);
    CHECK_THROWS_AS(VertexOrdering({0, 0, 1}), Error);
    CHECK_THROWS_AS(VertexOrdering({0, 3}), Error);
}

TEST_CASE("distances_from") {
    const auto p3 = gen::path(3);
    const auto d = distances_from(p3, 0, 2);
    CHECK(d == std::map<Vertex, std::uint32_t>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(distances_from(p3, 0, 1).size() == 2);

    const auto k4 = gen::complete(4);
    const auto dk = distances_from(k4, 2, 1);
    CHECK(dk.size() == 4);
    CHECK(dk.at(2) == 0);

    const auto h = gen::heawood();
    for (Vertex v = 0; v < 14; ++v) CHECK(distances_from(h, v, 3).size() == 14);
    CHECK(distances_from(h, 0, 2).size() < 14);
}

TEST_CASE("bfs ball agrees with all-pairs distances") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = oracle::random_gnp(12, 0.2, seed);
        const auto all = oracle::all_distances(g);
        BfsScratch scratch(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            for (std::uint32_t r = 0; r <= 3; ++r) {
                std::size_t expected = 0;
                for (Vertex u = 0; u < g.order(); ++u) expected += all[v][u] <= r ? 1 : 0;
                const auto ball = scratch.ball(g, v, r);
                CHECK(ball.size() == expected);
                for (auto [u, d] : ball) CHECK(all[v][u] == d);
            }
    }
}

TEST_CASE("max degree") {
    CHECK(max_degree(gen::star(5)) == 5);
    CHECK(max_degree(gen::cycle(6)) == 2);
    CHECK(max_degree(gen::heawood()) == 3);
    CHECK(min_degree(gen::heawood()) == 3);
    CHECK(max_degree(gen::empty(4)) == 0);
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy_ordering(gen::path(6)).degeneracy == 1);
    CHECK(degeneracy_ordering(gen::star(7)).degeneracy == 1);
    CHECK(degeneracy_ordering(gen::random_family({gen::RandomKind::TreeMaxDegree, 40, 5, 0, 3})).degeneracy == 1);
    CHECK(degeneracy_ordering(gen::complete(4)).degeneracy == 3);
    CHECK(degeneracy_ordering(gen::cycle(5)).degeneracy == 2);
    CHECK(degeneracy_ordering(gen::empty(3)).degeneracy == 0);
}

TEST_CASE("degeneracy ordering property: at most k earlier neighbors") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = oracle::random_gnp(15, 0.3, seed);
        const auto [k, ord] = degeneracy_ordering(g);
        CHECK(ord.size() == g.order());
        for (Vertex v = 0; v < g.order(); ++v) CHECK(count_earlier_at_distance(g, ord, v, 1) <= k);
        // Some subgraph has minimum degree exactly k: the suffix starting
        // where the deletion process met its largest minimum degree.
        bool witnessed = k == 0;
        for (std::size_t start = 0; start < ord.size() && !witnessed; ++start) {
            std::vector<Vertex> keep(ord.order().begin(), ord.order().begin() + static_cast<long>(start) + 1);
            witnessed = min_degree(induced_subgraph(g, keep)) >= k;
        }
        CHECK(witnessed);
    }
}

TEST_CASE("count_earlier_at_distance") {
    const auto p3 = gen::path(3);
    const auto ord = VertexOrdering::identity(3);
    CHECK(count_earlier_at_distance(p3, ord, 2, 2) == 1);
    CHECK(count_earlier_at_distance(p3, ord, 2, 1) == 1);
    for (std::uint32_t d = 1; d <= 4; ++d) CHECK(count_earlier_at_distance(p3, VertexOrdering({1, 0, 2}), 1, d) == 0);
    CHECK_THROWS_AS(count_earlier_at_distance(p3, ord, 2, 0), Error);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = oracle::random_gnp(12, 0.25, seed);
        const auto all = oracle::all_distances(g);
        const auto ord2 = degeneracy_ordering(g).ordering;
        for (Vertex v = 0; v < g.order(); ++v)
            for (std::uint32_t d = 1; d <= 4; ++d) {
                std::size_t expected = 0;
                for (Vertex u = 0; u < g.order(); ++u)
                    expected += ord2.position(u) < ord2.position(v) && all[u][v] == d ? 1 : 0;
                CHECK(count_earlier_at_distance(g, ord2, v, d) == expected);
            }
    }
}

TEST_CASE("bounded earlier count in degenerate graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = gen::random_family({gen::RandomKind::KDegenerate, 40, 2, 6, seed});
        const auto [k, ord] = degeneracy_ordering(g);
        REQUIRE(k <= 2);
        const std::size_t r = max_degree(g);
        for (Vertex v = 0; v < g.order(); ++v)
            for (std::uint32_t d = 2; d <= 4; ++d) {
                std::size_t bound = d * 2 * r;
                for (std::uint32_t i = 2; i < d; ++i) bound *= r - 1;
                CHECK(count_earlier_at_distance(g, ord, v, d) <= bound);
            }
    }
}

TEST_CASE("perfect elimination ordering") {
    CHECK(perfect_elimination_ordering(gen::random_family({gen::RandomKind::TreeMaxDegree, 20, 4, 0, 1})));
    CHECK_FALSE(perfect_elimination_ordering(gen::cycle(4)));
    CHECK(perfect_elimination_ordering(gen::complete(4)));
    CHECK(perfect_elimination_ordering(gen::empty(3)));

    SUBCASE("agrees with brute force on small graphs") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            const auto g = oracle::random_gnp(6 + seed % 2, 0.45, seed);
            const auto peo = perfect_elimination_ordering(g);
            CHECK(peo.has_value() == oracle::brute_chordal(g));
            if (!peo) continue;
            for (std::size_t i = 0; i < peo->size(); ++i) {
                std::vector<Vertex> later;
                for (Vertex u : g.neighbors((*peo)[i]))
                    if (peo->position(u) > i) later.push_back(u);
                for (auto a : later)
                    for (auto b : later) CHECK((a == b || g.adjacent(a, b)));
            }
        }
    }
}

TEST_CASE("bipartition") {
    const auto c6 = bipartition(gen::cycle(6));
    REQUIRE(c6);
    CHECK(c6->side_a == std::vector<Vertex>{0, 2, 4});
    CHECK(c6->side_b == std::vector<Vertex>{1, 3, 5});
    CHECK_FALSE(bipartition(gen::cycle(5)));
    const auto h = bipartition(gen::heawood());
    REQUIRE(h);
    CHECK(h->side_a.size() == 7);
    CHECK(h->side_b.size() == 7);
}

TEST_CASE("girth and shortest cycle") {
    CHECK_FALSE(girth(gen::path(5)));
    CHECK_FALSE(shortest_cycle(gen::star(4)));
    CHECK(girth(gen::complete(4)) == 3u);
    CHECK(shortest_cycle(gen::complete(4))->size() == 3);
    CHECK(girth(gen::heawood()) == 6u);
    CHECK(girth(gen::petersen()) == 5u);

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = oracle::random_gnp(10, 0.22, seed);
        const auto all = oracle::all_distances(g);
        // Shortest cycle through edge uv avoiding that edge, by BFS on g - uv.
        std::optional<std::size_t> expected;
        for (auto [u, v] : g.edges()) {
            const auto d = bfs_distances(without_edge(g, {u, v}), u)[v];
            if (d != kUnreachable) expected = std::min<std::size_t>(expected.value_or(SIZE_MAX), d + 1);
        }
        CHECK(girth(g) == expected);
        const auto cyc = shortest_cycle(g);
        CHECK(cyc.has_value() == expected.has_value());
        if (!cyc) continue;
        CHECK(cyc->size() == *expected);
        CHECK(std::set<Vertex>(cyc->begin(), cyc->end()).size() == cyc->size());
        for (std::size_t i = 0; i < cyc->size(); ++i) CHECK(g.adjacent((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
    }
}

TEST_CASE("induced K23") {
    const auto k23 = find_induced_k23(gen::complete_bipartite(2, 3));
    REQUIRE(k23);
    CHECK(k23->x1 == 0);
    CHECK(k23->x2 == 1);
    CHECK_FALSE(find_induced_k23(gen::complete(4)));
    const auto g = gen::complete_bipartite(3, 3);
    const auto f = find_induced_k23(g);
    REQUIRE(f);
    const Vertex ys[3] = {f->y1, f->y2, f->y3};
    CHECK_FALSE(g.adjacent(f->x1, f->x2));
    for (Vertex y : ys) {
        CHECK(g.adjacent(f->x1, y));
        CHECK(g.adjacent(f->x2, y));
        for (Vertex z : ys) CHECK_FALSE(g.adjacent(y, z));
    }
    CHECK_FALSE(find_induced_k23(gen::heawood()));
    CHECK_FALSE(find_induced_k23(gen::petersen()));
}

TEST_CASE("components and forests") {
    const auto g = build_graph(5, {{0, 1}, {3, 4}});
    const auto comps = connected_components(g);
    CHECK(comps == std::vector<std::vector<Vertex>>{{0, 1}, {2}, {3, 4}});
    CHECK_FALSE(is_connected(g));
    CHECK(is_forest(g));
    CHECK_FALSE(is_forest(gen::cycle(3)));
    CHECK(is_connected(gen::heawood()));
}

TEST_CASE("subgraph helpers") {
    const auto c5 = gen::cycle(5);
    const std::vector<Vertex> keep{0, 1, 2};
    const auto sub = induced_subgraph(c5, keep);
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 2);
    const std::vector<Edge> extra{{0, 2}};
    CHECK(with_edges_added(c5, extra).size() == 6);
    CHECK(without_edge(c5, {1, 0}).size() == 4);
}
