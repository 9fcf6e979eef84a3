#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ttone {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = UINT32_MAX;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted and
// symmetric; the graph is immutable once built.
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

// Duplicates are collapsed; self-loops throw InvalidEdge, out-of-range ids
// throw InvalidVertex.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// A permutation of the vertex set together with its inverse.
class VertexOrdering {
public:
    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<Vertex> order);

    static VertexOrdering identity(std::size_t n);

    std::span<const Vertex> order() const noexcept { return order_; }
    std::size_t position(Vertex v) const { return position_[v]; }
    std::size_t size() const noexcept { return order_.size(); }
    Vertex operator[](std::size_t i) const { return order_[i]; }

    VertexOrdering reversed() const;

private:
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
};

struct BallEntry {
    Vertex vertex;
    std::uint32_t dist;
};

// Reusable BFS workspace; avoids clearing an n-sized array on every query.
class BfsScratch {
public:
    explicit BfsScratch(std::size_t n = 0) : stamp_(n, 0), dist_(n, 0) {}

    // All vertices within `radius` of `source` in BFS order, source first.
    std::span<const BallEntry> ball(const Graph& g, Vertex source, std::uint32_t radius);

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> dist_;
    std::vector<BallEntry> out_;
    std::uint32_t epoch_ = 0;
};

std::map<Vertex, std::uint32_t> distances_from(const Graph& g, Vertex v, std::uint32_t cap);

// Full BFS distance vector; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex v);

std::size_t max_degree(const Graph& g);
std::size_t min_degree(const Graph& g);

struct DegeneracyResult {
    std::size_t degeneracy = 0;
    VertexOrdering ordering;
};

// Repeatedly removes a minimum-degree vertex (lowest id on ties) and prepends
// it, so each vertex has at most `degeneracy` earlier neighbors.
DegeneracyResult degeneracy_ordering(const Graph& g);

std::size_t count_earlier_at_distance(const Graph& g, const VertexOrdering& ord, Vertex v,
                                      std::uint32_t d);

// Elimination order whose later neighbors form cliques, or nullopt if the
// graph is not chordal. Uses maximum cardinality search.
std::optional<VertexOrdering> perfect_elimination_ordering(const Graph& g);

struct Bipartition {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
};

// Per component, the lowest-id vertex lands on side A.
std::optional<Bipartition> bipartition(const Graph& g);

std::optional<std::size_t> girth(const Graph& g);

// A minimum-length cycle, lexicographically least as a vertex sequence that
// starts at its smallest vertex.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

struct InducedK23 {
    Vertex x1, x2;
    Vertex y1, y2, y3;
};

std::optional<InducedK23> find_induced_k23(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

// Subgraph induced by `keep`; vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

Graph with_edges_added(const Graph& g, std::span<const Edge> extra);
Graph without_edge(const Graph& g, Edge e);

}  // namespace ttone
