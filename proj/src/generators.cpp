#include "ttone/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ttone/error.hpp"

namespace ttone::gen {

Graph from_lcf(const LcfSpec& spec) {
    const std::size_t n = spec.shifts.size() * spec.repeat;
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "LCF cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
        const auto shift = spec.shifts[i % spec.shifts.size()];
        const auto j = static_cast<std::size_t>(((static_cast<long long>(i) + shift) % static_cast<long long>(n) +
                                                 static_cast<long long>(n)) %
                                                static_cast<long long>(n));
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return build_graph(n, edges);
}

Graph heawood() { return from_lcf({{5, -5}, 7}); }

PartialToneColoring heawood_seven_coloring() {
    static const Label ring[7] = {{1, 4}, {2, 5}, {3, 6}, {4, 7}, {5, 1}, {6, 2}, {7, 3}};
    PartialToneColoring c({2, 7}, 14);
    for (Vertex j = 0; j < 14; ++j) c.assign(j, ring[j % 7]);
    return c;
}

Graph complete_ary_tree(std::size_t arity, std::size_t height) {
    if (arity < 1) throw Error(ErrorKind::InvalidArgument, "arity must be >= 1");
    std::size_t n = 1, level = 1;
    for (std::size_t h = 0; h < height; ++h) {
        if (level > kMaxGeneratedVertices / arity) throw Error(ErrorKind::TooLarge, "complete ary tree");
        level *= arity;
        n += level;
        if (n > kMaxGeneratedVertices) throw Error(ErrorKind::TooLarge, "complete ary tree");
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // BFS numbering: the children of vertex p are arity*p + 1 .. arity*p + arity.
    for (std::size_t child = 1; child < n; ++child)
        edges.emplace_back(static_cast<Vertex>((child - 1) / arity), static_cast<Vertex>(child));
    return build_graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
    return build_graph(a + b, edges);
}

Graph star(std::size_t k) { return complete_bipartite(1, k); }

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return build_graph(n, edges);
}

Graph prism(std::size_t n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "prism needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        const auto j = static_cast<Vertex>((i + 1) % n);
        edges.emplace_back(i, j);
        edges.emplace_back(static_cast<Vertex>(i + n), static_cast<Vertex>(j + n));
        edges.emplace_back(i, static_cast<Vertex>(i + n));
    }
    return build_graph(2 * n, edges);
}

Graph empty(std::size_t n) { return build_graph(n, std::span<const Edge>{}); }

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Graph random_max_degree(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n, r = s.param;
    std::vector<std::size_t> deg(n, 0);
    std::set<Edge> edges;
    if (n >= 2 && r >= 1) {
        const std::size_t attempts = n * r;
        for (std::size_t i = 0; i < attempts; ++i) {
            auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
            auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
            if (u == v || deg[u] >= r || deg[v] >= r) continue;
            if (!edges.emplace(std::min(u, v), std::max(u, v)).second) continue;
            ++deg[u];
            ++deg[v];
        }
    }
    return build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph random_cubic(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n;
    if (n < 4 || n % 2 != 0) throw Error(ErrorKind::Infeasible, "cubic graphs need even n >= 4");
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < 3; ++i) points.push_back(v);
    // Configuration model: shuffle half-edges, pair consecutively, reject
    // loops and multi-edges.
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            auto u = points[i], v = points[i + 1];
            ok = u != v && edges.emplace(std::min(u, v), std::max(u, v)).second;
        }
        if (ok) return build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }
    throw Error(ErrorKind::Infeasible, "configuration model kept producing multigraphs");
}

Graph random_tree(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n, cap = s.param;
    if (n == 0) return empty(0);
    if (cap == 0) {
        if (n != 1) throw Error(ErrorKind::Infeasible, "a tree with max degree 0 has one vertex");
        return empty(1);
    }
    if (n < cap + 1) throw Error(ErrorKind::Infeasible, "tree needs n >= max degree + 1");
    if (cap == 1 && n != 2) throw Error(ErrorKind::Infeasible, "max degree 1 tree is K2");
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> edges;
    std::vector<Vertex> open;  // vertices with spare capacity
    auto attach = [&](Vertex parent, Vertex child) {
        edges.emplace_back(parent, child);
        ++deg[parent];
        ++deg[child];
    };
    auto rebuild_open = [&](std::size_t upto) {
        open.clear();
        for (Vertex v = 0; v < upto; ++v)
            if (deg[v] < cap) open.push_back(v);
    };
    // Random recursive core on the first n - cap vertices.
    const std::size_t core = n - cap;
    for (Vertex v = 1; v < core; ++v) {
        rebuild_open(v);
        attach(open[uniform(rng, 0, open.size() - 1)], v);
    }
    // A hub in the core is filled up to the cap, the rest attach anywhere.
    const auto hub = static_cast<Vertex>(uniform(rng, 0, core - 1));
    Vertex next = static_cast<Vertex>(core);
    while (deg[hub] < cap) attach(hub, next++);
    for (; next < n; ++next) {
        rebuild_open(next);
        attach(open[uniform(rng, 0, open.size() - 1)], next);
    }
    return build_graph(n, edges);
}

Graph random_degenerate(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n, k = s.param, cap = s.param2 == 0 ? SIZE_MAX : s.param2;
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
        std::vector<Vertex> earlier;
        for (Vertex u = 0; u < v; ++u)
            if (deg[u] < cap) earlier.push_back(u);
        std::shuffle(earlier.begin(), earlier.end(), rng);
        const std::size_t want = std::min({k, earlier.size(), cap});
        for (std::size_t i = 0; i < want; ++i) {
            edges.emplace_back(earlier[i], v);
            ++deg[earlier[i]];
            ++deg[v];
        }
    }
    return build_graph(n, edges);
}

Graph random_chordal(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n, cap = s.param == 0 ? SIZE_MAX : s.param;
    std::vector<std::vector<Vertex>> adj(n);
    std::vector<Edge> edges;
    // Each new vertex attaches to a clique of earlier vertices, so the reverse
    // insertion order is a perfect elimination ordering.
    for (Vertex v = 1; v < n; ++v) {
        const auto anchor = static_cast<Vertex>(uniform(rng, 0, v - 1));
        if (adj[anchor].size() >= cap) continue;
        std::vector<Vertex> clique{anchor};
        std::vector<Vertex> pool = adj[anchor];
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t want = uniform(rng, 0, pool.size());
        for (Vertex w : pool) {
            if (clique.size() > want || clique.size() >= cap) break;
            if (adj[w].size() >= cap) continue;
            bool all = true;
            for (Vertex x : clique)
                all = all && std::find(adj[w].begin(), adj[w].end(), x) != adj[w].end();
            if (all) clique.push_back(w);
        }
        for (Vertex w : clique) {
            adj[w].push_back(v);
            adj[v].push_back(w);
            edges.emplace_back(w, v);
        }
    }
    return build_graph(n, edges);
}

Graph random_bipartite(const RandomSpec& s, Rng& rng) {
    const std::size_t n = s.n, r = s.param;
    std::vector<std::size_t> deg(n, 0);
    std::vector<int> side(n);
    for (auto& x : side) x = static_cast<int>(uniform(rng, 0, 1));
    std::set<Edge> edges;
    if (n >= 2 && r >= 1) {
        for (std::size_t i = 0; i < n * r; ++i) {
            auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
            auto v = static_cast<Vertex>(uniform(rng, 0, n - 1));
            if (side[u] == side[v] || deg[u] >= r || deg[v] >= r) continue;
            if (!edges.emplace(std::min(u, v), std::max(u, v)).second) continue;
            ++deg[u];
            ++deg[v];
        }
    }
    return build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

std::vector<std::size_t> parse_numbers(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad number '" + item + "'");
        }
    }
    return out;
}

std::map<std::string, std::size_t> parse_keyed(const std::string& text) {
    std::map<std::string, std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected key=value, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad value in '" + item + "'");
        }
    }
    return out;
}

}  // namespace

Graph random_family(const RandomSpec& spec) {
    Rng rng(spec.seed);
    switch (spec.kind) {
    case RandomKind::MaxDegree: return random_max_degree(spec, rng);
    case RandomKind::Cubic: return random_cubic(spec, rng);
    case RandomKind::TreeMaxDegree: return random_tree(spec, rng);
    case RandomKind::KDegenerate: return random_degenerate(spec, rng);
    case RandomKind::Chordal: return random_chordal(spec, rng);
    case RandomKind::Bipartite: return random_bipartite(spec, rng);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown random kind");
}

Graph named(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto args = [&](std::size_t want) {
        auto v = parse_numbers(rest);
        if (v.size() != want)
            throw Error(ErrorKind::ParseError, "'" + name + "' takes " + std::to_string(want) + " parameter(s)");
        return v;
    };
    if (name == "petersen") return petersen();
    if (name == "heawood") return heawood();
    if (name == "prism") return rest.empty() ? prism(3) : prism(args(1)[0]);
    if (name == "complete") return complete(args(1)[0]);
    if (name == "complete_bipartite") {
        auto a = args(2);
        return complete_bipartite(a[0], a[1]);
    }
    if (name == "star") return star(args(1)[0]);
    if (name == "path") return path(args(1)[0]);
    if (name == "cycle") return cycle(args(1)[0]);
    if (name == "empty") return empty(args(1)[0]);
    if (name == "ary_tree") {
        auto a = args(2);
        return complete_ary_tree(a[0], a[1]);
    }
    if (name == "random") {
        const auto colon2 = rest.find(':');
        const std::string kind = rest.substr(0, colon2);
        const auto kv = parse_keyed(colon2 == std::string::npos ? "" : rest.substr(colon2 + 1));
        for (const auto& entry : kv)
            if (entry.first != "n" && entry.first != "seed" && entry.first != "r" && entry.first != "k")
                throw Error(ErrorKind::ParseError, "unknown key '" + entry.first + "' in '" + spec + "'");
        auto get = [&](const std::string& key, std::size_t fallback) {
            auto it = kv.find(key);
            return it == kv.end() ? fallback : it->second;
        };
        RandomSpec rs;
        rs.n = get("n", 10);
        rs.seed = get("seed", 0);
        if (kind == "max_degree") {
            rs.kind = RandomKind::MaxDegree;
            rs.param = get("r", 3);
        } else if (kind == "cubic") {
            rs.kind = RandomKind::Cubic;
        } else if (kind == "tree") {
            rs.kind = RandomKind::TreeMaxDegree;
            rs.param = get("r", 3);
        } else if (kind == "degenerate") {
            rs.kind = RandomKind::KDegenerate;
            rs.param = get("k", 2);
            rs.param2 = get("r", 0);
        } else if (kind == "chordal") {
            rs.kind = RandomKind::Chordal;
            rs.param = get("r", 4);
        } else if (kind == "bipartite") {
            rs.kind = RandomKind::Bipartite;
            rs.param = get("r", 3);
        } else {
            throw Error(ErrorKind::ParseError, "unknown random family '" + kind + "'");
        }
        return random_family(rs);
    }
    throw Error(ErrorKind::ParseError, "unknown graph '" + name + "'");
}

}  // namespace ttone::gen
