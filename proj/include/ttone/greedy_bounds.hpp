#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone {

struct BoundReport {
    std::string algorithm;
    std::size_t budget = 0;         // k handed to the colorer
    std::size_t formula_budget = 0; // the theorem's formula before clamping to k >= t
    std::size_t used = 0;           // distinct colors on the output
    bool valid = false;
    VertexOrdering order;
    std::optional<std::size_t> palette_size;
    double seconds = 0.0;
};

struct ColorResult {
    PartialToneColoring coloring;
    BoundReport report;
};

// Integer-exact budgets.

// 2*delta + ceil(sqrt(2)*delta).
std::size_t budget_2tone_general(std::size_t delta);
// 2 * ceil(sqrt(2)*delta).
std::size_t budget_2tone_bipartite(std::size_t delta);
// delta + ceil(sqrt(6)/2*delta) + 1.
std::size_t budget_2tone_chordal(std::size_t delta);
// (t^2 + t) * delta.
std::size_t budget_ttone_general(std::size_t delta, unsigned t);
// k*t + ceil(k * t^2 * r^(1 - 1/t)); throws TooLarge on 128-bit overflow.
std::size_t budget_ttone_degenerate(std::size_t k, unsigned t, std::size_t r);

// Least m >= 0 with m^p * den >= num (saturating 128-bit arithmetic).
std::uint64_t least_root_at_least(unsigned p, unsigned __int128 num, unsigned __int128 den = 1);

ColorResult color_2tone_greedy(const Graph& g);
ColorResult color_2tone_bipartite(const Graph& g);
ColorResult color_2tone_chordal(const Graph& g);
ColorResult color_ttone_greedy(const Graph& g, unsigned t);
ColorResult color_ttone_degenerate(const Graph& g, unsigned t);

// Colors a forest with t+1 (t even) disjoint palettes indexed by depth mod
// t+1; odd t runs with t+1 tones and drops each label's largest color. The
// palette size grows in steps of ceil(sqrt(delta)) until every level fits.
ColorResult color_tree_ttone(const Graph& g, unsigned t);

// ceil((5 + sqrt(1 + 8*delta)) / 2), the 2-tone number of a tree.
std::size_t tree_tau2(std::size_t delta);

struct AryTreeBound {
    std::size_t value = 0;        // the sum of max{0, t - 2*ceil(lg t)*i}
    std::size_t tree_vertices = 0;
    std::size_t lg_t = 0;
    double closed_estimate = 0.0; // t^2 / (8 ceil(lg t))
};

AryTreeBound ary_tree_lower_bound(std::size_t r, unsigned t);

std::size_t ceil_log2(std::size_t x);
std::uint64_t isqrt(std::uint64_t x);

}  // namespace ttone
