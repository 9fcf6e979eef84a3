#include "ttone/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

#include "ttone/error.hpp"

namespace ttone {

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(ErrorKind::InvalidVertex,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                            std::to_string(n));
        if (u == v) throw Error(ErrorKind::InvalidEdge, "self-loop at " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        twice += a.size();
    }
    g.edge_count_ = twice / 2;
    return g;
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size(), SIZE_MAX) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (order_[i] >= order_.size() || position_[order_[i]] != SIZE_MAX)
            throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation");
        position_[order_[i]] = i;
    }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    return VertexOrdering(std::move(order));
}

VertexOrdering VertexOrdering::reversed() const {
    return VertexOrdering(std::vector<Vertex>(order_.rbegin(), order_.rend()));
}

std::span<const BallEntry> BfsScratch::ball(const Graph& g, Vertex source, std::uint32_t radius) {
    if (stamp_.size() < g.order()) {
        stamp_.assign(g.order(), 0);
        dist_.assign(g.order(), 0);
        epoch_ = 0;
    }
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    out_.clear();
    out_.push_back({source, 0});
    stamp_[source] = epoch_;
    dist_[source] = 0;
    for (std::size_t head = 0; head < out_.size(); ++head) {
        auto [x, d] = out_[head];
        if (d == radius) continue;
        for (Vertex y : g.neighbors(x)) {
            if (stamp_[y] == epoch_) continue;
            stamp_[y] = epoch_;
            dist_[y] = d + 1;
            out_.push_back({y, d + 1});
        }
    }
    return out_;
}

std::map<Vertex, std::uint32_t> distances_from(const Graph& g, Vertex v, std::uint32_t cap) {
    if (v >= g.order()) throw Error(ErrorKind::InvalidVertex, std::to_string(v));
    BfsScratch scratch(g.order());
    std::map<Vertex, std::uint32_t> out;
    for (auto e : scratch.ball(g, v, cap)) out.emplace(e.vertex, e.dist);
    return out;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex v) {
    std::vector<std::uint32_t> dist(g.order(), kUnreachable);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : g.neighbors(x))
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    std::size_t best = SIZE_MAX;
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<bool> removed(n, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    DegeneracyResult result;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.degeneracy = std::max(result.degeneracy, d);
        removed[v] = true;
        removal.push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            --deg[u];
            queue.emplace(deg[u], u);
        }
    }
    // Prepending each removed vertex is the same as reversing the removal order.
    std::reverse(removal.begin(), removal.end());
    result.ordering = VertexOrdering(std::move(removal));
    return result;
}

std::size_t count_earlier_at_distance(const Graph& g, const VertexOrdering& ord, Vertex v,
                                      std::uint32_t d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "distance must be >= 1");
    BfsScratch scratch(g.order());
    std::size_t count = 0;
    const auto pos = ord.position(v);
    for (auto e : scratch.ball(g, v, d))
        if (e.dist == d && ord.position(e.vertex) < pos) ++count;
    return count;
}

std::optional<VertexOrdering> perfect_elimination_ordering(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<Vertex> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (numbered[v]) continue;
            if (!found || weight[v] > weight[pick]) {
                pick = v;
                found = true;
            }
        }
        numbered[pick] = true;
        visit.push_back(pick);
        for (Vertex u : g.neighbors(pick))
            if (!numbered[u]) ++weight[u];
    }
    // The reverse of the visit order is a perfect elimination ordering iff g is chordal.
    VertexOrdering peo(std::vector<Vertex>(visit.rbegin(), visit.rend()));
    for (Vertex v = 0; v < n; ++v) {
        const auto pv = peo.position(v);
        std::optional<Vertex> parent;
        for (Vertex u : g.neighbors(v))
            if (peo.position(u) > pv && (!parent || peo.position(u) < peo.position(*parent)))
                parent = u;
        if (!parent) continue;
        for (Vertex u : g.neighbors(v))
            if (u != *parent && peo.position(u) > pv && !g.adjacent(u, *parent))
                return std::nullopt;
    }
    return peo;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : g.neighbors(x)) {
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? out.side_a : out.side_b).push_back(v);
    return out;
}

std::optional<std::size_t> girth(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = SIZE_MAX;
    std::vector<std::uint32_t> dist(n);
    std::vector<Vertex> parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[s] = 0;
        parent[s] = s;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] == kUnreachable) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min<std::size_t>(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == SIZE_MAX) return std::nullopt;
    return best;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    auto len = girth(g);
    if (!len) return std::nullopt;
    const std::size_t target = *len;
    // Smallest start vertex first; DFS in increasing neighbor order yields the
    // lexicographically least cycle through that start.
    for (Vertex s = 0; s < g.order(); ++s) {
        auto dist = bfs_distances(g, s);
        std::vector<Vertex> path{s};
        std::vector<bool> on_path(g.order(), false);
        on_path[s] = true;
        std::function<bool()> dfs = [&]() -> bool {
            Vertex x = path.back();
            for (Vertex y : g.neighbors(x)) {
                if (y == s && path.size() == target) return true;
                if (y <= s || on_path[y]) continue;
                if (path.size() >= target) continue;
                // Remaining steps back to s must cover the distance.
                if (dist[y] > target - path.size()) continue;
                path.push_back(y);
                on_path[y] = true;
                if (dfs()) return true;
                on_path[y] = false;
                path.pop_back();
            }
            return false;
        };
        if (dfs()) return path;
    }
    return std::nullopt;
}

std::optional<InducedK23> find_induced_k23(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> common;
    for (Vertex x1 = 0; x1 < n; ++x1) {
        for (Vertex x2 = x1 + 1; x2 < n; ++x2) {
            if (g.adjacent(x1, x2)) continue;
            common.clear();
            std::set_intersection(g.neighbors(x1).begin(), g.neighbors(x1).end(),
                                  g.neighbors(x2).begin(), g.neighbors(x2).end(),
                                  std::back_inserter(common));
            const std::size_t c = common.size();
            if (c < 3) continue;
            for (std::size_t a = 0; a < c; ++a)
                for (std::size_t b = a + 1; b < c; ++b) {
                    if (g.adjacent(common[a], common[b])) continue;
                    for (std::size_t d = b + 1; d < c; ++d)
                        if (!g.adjacent(common[a], common[d]) && !g.adjacent(common[b], common[d]))
                            return InducedK23{x1, x2, common[a], common[b], common[d]};
                }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex y : g.neighbors(comp[head]))
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) { return g.size() + connected_components(g).size() == g.order(); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> index(g.order(), UINT32_MAX);
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex y : g.neighbors(keep[i]))
            if (index[y] != UINT32_MAX && index[y] > i) edges.emplace_back(static_cast<Vertex>(i), index[y]);
    return build_graph(keep.size(), edges);
}

Graph with_edges_added(const Graph& g, std::span<const Edge> extra) {
    auto edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return build_graph(g.order(), edges);
}

Graph without_edge(const Graph& g, Edge e) {
    auto edges = g.edges();
    std::erase_if(edges, [&](const Edge& f) {
        return (f.first == e.first && f.second == e.second) || (f.first == e.second && f.second == e.first);
    });
    return build_graph(g.order(), edges);
}

}  // namespace ttone
