#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone::gen {

// Hamiltonian cubic graph: cycle 0..n-1 plus chords i -> i + shifts[i mod len].
struct LcfSpec {
    std::vector<int> shifts;
    std::size_t repeat = 1;
};

Graph from_lcf(const LcfSpec& spec);

// LCF [5,-5]^7: chords i <-> i+5 from even positions.
Graph heawood();

// Vertex j labeled with entry j mod 7 of 14, 25, 36, 47, 51, 62, 73.
PartialToneColoring heawood_seven_coloring();

// Rooted complete tree with BFS numbering, root 0. Throws TooLarge above
// kMaxGeneratedVertices.
Graph complete_ary_tree(std::size_t arity, std::size_t height);

inline constexpr std::size_t kMaxGeneratedVertices = 10'000'000;

Graph petersen();
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// K_{1,k} with center 0.
Graph star(std::size_t k);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
// C_n x K_2; the triangular prism for n = 3.
Graph prism(std::size_t n = 3);
Graph empty(std::size_t n);

enum class RandomKind {
    MaxDegree,      // param = degree cap r
    Cubic,          // param ignored
    TreeMaxDegree,  // param = exact maximum degree
    KDegenerate,    // param = k; param2 = optional degree cap (0 = none)
    Chordal,        // param = degree cap
    Bipartite,      // param = degree cap
};

struct RandomSpec {
    RandomKind kind = RandomKind::MaxDegree;
    std::size_t n = 0;
    std::size_t param = 0;
    std::size_t param2 = 0;
    std::uint64_t seed = 0;
};

// Pure function of the spec. Throws Infeasible for impossible parameters.
Graph random_family(const RandomSpec& spec);

// "petersen", "heawood", "prism", "complete:4", "complete_bipartite:2,3",
// "star:5", "path:4", "cycle:6", "empty:3", "ary_tree:2,3",
// "random:cubic:n=10,seed=1", "random:max_degree:n=20,r=4,seed=3", ...
Graph named(const std::string& spec);

}  // namespace ttone::gen
