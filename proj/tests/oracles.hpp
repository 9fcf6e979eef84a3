#pragma once

// Independent reference implementations used only by tests. They favour
// obviousness over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ttone/graph.hpp"

namespace oracle {

using ttone::Edge;
using ttone::Graph;
using ttone::Vertex;

constexpr std::uint32_t kInf = 1u << 30;

// All-pairs distances by Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<std::uint32_t>> all_distances(const Graph& g) {
    const auto n = g.order();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
    for (Vertex u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (Vertex v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

inline Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return ttone::build_graph(n, edges);
}

// Plain chronological backtracking in id order over every t-subset of [k]
// (as bitmasks), checking the distance condition against all earlier
// vertices. No symmetry breaking, no propagation. k <= 20.
class NaiveSearch {
public:
    NaiveSearch(const Graph& g, unsigned t, unsigned k) : n_(g.order()), t_(t), dist_(all_distances(g)) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
            if (static_cast<unsigned>(std::popcount(mask)) == t) labels_.push_back(mask);
        chosen_.assign(n_, 0);
    }

    bool exists() { return n_ == 0 || (!labels_.empty() && place(0)); }
    const std::vector<std::uint32_t>& assignment() const { return chosen_; }

private:
    bool place(std::size_t v) {
        if (v == n_) return true;
        for (auto l : labels_) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                ok = static_cast<std::uint32_t>(std::popcount(l & chosen_[u])) < dist_[u][v];
            if (!ok) continue;
            chosen_[v] = l;
            if (place(v + 1)) return true;
        }
        return false;
    }

    std::size_t n_;
    unsigned t_;
    std::vector<std::vector<std::uint32_t>> dist_;
    std::vector<std::uint32_t> labels_;
    std::vector<std::uint32_t> chosen_;
};

inline bool naive_colorable(const Graph& g, unsigned t, unsigned k) { return NaiveSearch(g, t, k).exists(); }

inline unsigned naive_tau(const Graph& g, unsigned t, unsigned kmax) {
    for (unsigned k = t; k <= kmax; ++k)
        if (naive_colorable(g, t, k)) return k;
    return 0;
}

// Chordality by trying every vertex order for a perfect elimination order.
inline bool brute_chordal(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < perm.size() && ok; ++i)
            for (std::size_t a = i + 1; a < perm.size() && ok; ++a)
                for (std::size_t b = a + 1; b < perm.size() && ok; ++b)
                    if (g.adjacent(perm[i], perm[a]) && g.adjacent(perm[i], perm[b]))
                        ok = g.adjacent(perm[a], perm[b]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
