#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone {

// Colors of a 2-tone 8-coloring of any graph with maximum degree <= 3.
inline constexpr unsigned kCubicColors = 8;

enum class CycleCaseTag {
    IdenticalEnds,   // u_{k-1}, u_k, u_1 look like 12, 12, 34
    DisjointTriple,  // 12, 34, 56
    Overlapping,     // 12, 13, L with 1 not in L
};

std::string_view to_string(CycleCaseTag tag);

struct CycleCase {
    CycleCaseTag tag = CycleCaseTag::IdenticalEnds;
    // True when the cycle has to be walked in the other direction (around
    // v_k) for the labels to match the pattern.
    bool reflected = false;
};

// Labels of u_{k-1}, u_k, u_1; `before` and `after` must be disjoint.
CycleCase classify_cycle_case(const Label& before, const Label& middle, const Label& after);

struct CubicTrace {
    // Connected pieces handled, including those split off by reductions.
    std::size_t components = 0;
    std::size_t k4_blocks = 0;
    std::size_t low_degree_steps = 0;
    std::size_t k23_steps = 0;
    std::size_t cycle_steps = 0;
    std::array<std::size_t, 3> case_counts{};
    std::size_t reflections = 0;
    // Steps where fewer valid labels showed up than the counting argument
    // promises for that step.
    std::size_t lemma_shortfalls = 0;
    // Cycles that needed exhaustive backtracking to finish.
    std::size_t fallbacks = 0;
    std::vector<std::string> log;

    std::string to_text() const;
};

struct CubicResult {
    PartialToneColoring coloring;
    CubicTrace trace;
};

// Total 2-tone 8-coloring of a graph with maximum degree <= 3, following the
// reduction structure: low-degree vertex, induced K_{2,3}, shortest cycle.
// Throws DegreeTooHigh when some vertex has degree > 3.
CubicResult color_cubic_8(const Graph& g);

// Colors by non-increasing distance from `anchor` (ties by id), finishing with
// N[anchor]. Other components are colored by color_cubic_8.
PartialToneColoring color_from_low_degree(const Graph& g, Vertex anchor);

// `outer` colors everything except the five K_{2,3} vertices.
PartialToneColoring resolve_k23(const Graph& g, const InducedK23& sub, const PartialToneColoring& outer);

struct CycleReduction {
    Graph reduced;              // g - V(C) plus the bridging edges
    std::vector<Vertex> kept;   // vertex i of `reduced` is kept[i] in g
    std::vector<Vertex> cycle;  // v_1..v_k in cycle order, rotated as required
    std::vector<Vertex> outer;  // u_i, the off-cycle neighbor of v_i
    std::vector<Edge> added;    // bridging edges actually added, in g's ids
};

// `cycle` must be a shortest cycle of a K_{2,3}-free graph whose cycle
// vertices have degree 3. Adds u_{k-1}u_1 and, for |C| >= 4, u_k u_2.
CycleReduction reduce_cycle(const Graph& g, std::span<const Vertex> cycle);

// Colors the cycle of `red` given `outer`, a coloring of g that leaves only
// the cycle uncolored.
PartialToneColoring extend_around_cycle(const Graph& g, const CycleReduction& red,
                                        const PartialToneColoring& outer, CubicTrace* trace = nullptr);

}  // namespace ttone
