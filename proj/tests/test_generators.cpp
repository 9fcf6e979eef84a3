#include <doctest.h>

#include "oracles.hpp"
#include "ttone/error.hpp"
#include "ttone/generators.hpp"

using namespace ttone;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInvariant;
}

}  // namespace

TEST_CASE("heawood graph") {
    const auto h = gen::heawood();
    CHECK(h.order() == 14);
    CHECK(h.size() == 21);
    CHECK(min_degree(h) == 3);
    CHECK(max_degree(h) == 3);
    CHECK(girth(h) == 6u);
    const auto sides = bipartition(h);
    REQUIRE(sides);
    const auto all = oracle::all_distances(h);
    std::uint32_t diameter = 0;
    for (const auto& row : all)
        for (auto d : row) diameter = std::max(diameter, d);
    CHECK(diameter == 3);
    for (const auto* side : {&sides->side_a, &sides->side_b})
        for (Vertex a : *side)
            for (Vertex b : *side) {
                if (a == b) continue;
                std::size_t common = 0;
                for (Vertex x : h.neighbors(a)) common += h.adjacent(x, b) ? 1 : 0;
                CHECK(common == 1);
                CHECK(all[a][b] == 2);
            }
}

TEST_CASE("heawood seven-coloring") {
    const auto h = gen::heawood();
    const auto c = gen::heawood_seven_coloring();
    CHECK(c.params().t == 2);
    CHECK(c.params().k == 7);
    CHECK(c.label(0) == Label{1, 4});
    CHECK(c.label(7) == Label{1, 4});
    CHECK(c.label(4) == Label{5, 1});
    const auto all = oracle::all_distances(h);
    for (Vertex j = 0; j < 7; ++j) {
        CHECK(c.label(j) == c.label(j + 7));
        CHECK(all[j][j + 7] == 3);
    }
    CHECK(verify_coloring(h, c).empty());
}

TEST_CASE("lcf") {
    const auto k4 = gen::from_lcf({{2}, 4});
    CHECK(k4.size() == 6);
    CHECK(max_degree(k4) == 3);
    CHECK(kind_of([] { gen::from_lcf({{}, 4}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("complete ary tree") {
    CHECK(gen::complete_ary_tree(2, 1).order() == 3);
    CHECK(gen::complete_ary_tree(2, 2).order() == 7);
    const auto t = gen::complete_ary_tree(2, 2);
    CHECK(max_degree(t) == 3);
    CHECK(t.degree(0) == 2);
    CHECK(is_forest(t));
    CHECK(is_connected(t));
    for (std::size_t a = 2; a <= 5; ++a)
        for (std::size_t h = 0; h <= 5; ++h) {
            std::size_t expected = 1, level = 1;
            for (std::size_t i = 0; i < h; ++i) expected += level *= a;
            CHECK(gen::complete_ary_tree(a, h).order() == expected);
        }
    CHECK(gen::complete_ary_tree(1, 4).order() == 5);
    CHECK(kind_of([] { gen::complete_ary_tree(10, 20); }) == ErrorKind::TooLarge);
}

TEST_CASE("named families") {
    const auto k4 = gen::complete(4);
    CHECK(k4.size() == 6);
    CHECK(min_degree(k4) == 3);
    const auto k23 = gen::complete_bipartite(2, 3);
    CHECK(k23.size() == 6);
    CHECK(find_induced_k23(k23));
    const auto p = gen::petersen();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(girth(p) == 5u);
    CHECK(gen::prism().order() == 6);
    CHECK(gen::prism().size() == 9);
    CHECK(gen::star(5).degree(0) == 5);
    CHECK(gen::cycle(6).size() == 6);
    CHECK(gen::path(4).size() == 3);
    CHECK(gen::empty(3).size() == 0);
    CHECK(kind_of([] { gen::cycle(2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("named spec strings") {
    CHECK(gen::named("petersen").size() == 15);
    CHECK(gen::named("heawood").order() == 14);
    CHECK(gen::named("complete:4").size() == 6);
    CHECK(gen::named("complete_bipartite:2,3").order() == 5);
    CHECK(gen::named("star:5").order() == 6);
    CHECK(gen::named("path:4").order() == 4);
    CHECK(gen::named("cycle:6").size() == 6);
    CHECK(gen::named("empty:3").order() == 3);
    CHECK(gen::named("ary_tree:2,3").order() == 15);
    CHECK(gen::named("prism").order() == 6);
    CHECK(gen::named("random:cubic:n=10,seed=1").order() == 10);
    CHECK(gen::named("random:max_degree:n=20,r=4,seed=3").order() == 20);
    CHECK(gen::named("random:degenerate:n=20,k=2,seed=3").order() == 20);
    CHECK(kind_of([] { gen::named("dodecahedron"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { gen::named("complete:x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { gen::named("random:cubic:n=10,bogus=1"); }) == ErrorKind::ParseError);
}

TEST_CASE("random families") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto cubic = gen::random_family({gen::RandomKind::Cubic, 8, 0, 0, seed});
        CHECK(min_degree(cubic) == 3);
        CHECK(max_degree(cubic) == 3);
        CHECK(cubic.edges() == gen::random_family({gen::RandomKind::Cubic, 8, 0, 0, seed}).edges());

        const auto md = gen::random_family({gen::RandomKind::MaxDegree, 30, 5, 0, seed});
        CHECK(max_degree(md) <= 5);

        const auto tree = gen::random_family({gen::RandomKind::TreeMaxDegree, 30, 6, 0, seed});
        CHECK(is_forest(tree));
        CHECK(is_connected(tree));
        CHECK(max_degree(tree) == 6);

        const auto dg = gen::random_family({gen::RandomKind::KDegenerate, 30, 2, 0, seed});
        CHECK(degeneracy_ordering(dg).degeneracy <= 2);
        const auto capped = gen::random_family({gen::RandomKind::KDegenerate, 30, 3, 6, seed});
        CHECK(degeneracy_ordering(capped).degeneracy <= 3);
        CHECK(max_degree(capped) <= 6);

        const auto ch = gen::random_family({gen::RandomKind::Chordal, 30, 5, 0, seed});
        CHECK(perfect_elimination_ordering(ch));
        CHECK(max_degree(ch) <= 5);

        const auto bp = gen::random_family({gen::RandomKind::Bipartite, 30, 4, 0, seed});
        CHECK(bipartition(bp));
        CHECK(max_degree(bp) <= 4);
    }
    CHECK(kind_of([] { gen::random_family({gen::RandomKind::Cubic, 7, 0, 0, 1}); }) == ErrorKind::Infeasible);
    CHECK(kind_of([] { gen::random_family({gen::RandomKind::Cubic, 2, 0, 0, 1}); }) == ErrorKind::Infeasible);
    CHECK(kind_of([] { gen::random_family({gen::RandomKind::TreeMaxDegree, 4, 6, 0, 1}); }) == ErrorKind::Infeasible);
}
