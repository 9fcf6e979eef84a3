#include "ttone/greedy_bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ttone/error.hpp"

namespace ttone {

namespace {

using u128 = unsigned __int128;
constexpr u128 kSaturated = ~u128{0};

u128 mul_sat(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

u128 pow_sat(u128 base, unsigned p) {
    u128 r = 1;
    for (unsigned i = 0; i < p; ++i) r = mul_sat(r, base);
    return r;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish_report(const Graph& g, ColorResult& r, const Stopwatch& clock) {
    r.report.used = r.coloring.used_color_count();
    r.report.valid = r.coloring.is_total() && verify_coloring(g, r.coloring).empty();
    r.report.seconds = clock.seconds();
    if (!r.report.valid)
        throw Error(ErrorKind::InternalInvariant, r.report.algorithm + " produced an invalid coloring");
}

// Colors vertices in `order`, each with the least admitted label drawn from
// palette(v). An empty candidate set contradicts the bound being realized.
template <class PaletteOf>
bool greedy_in_order(const Graph& g, PartialToneColoring& c, std::span<const Vertex> order,
                     PaletteOf&& palette) {
    BfsScratch scratch(g.order());
    for (Vertex v : order) {
        auto constraints = LabelConstraints::collect(g, c, v, scratch);
        auto l = constraints.first_admitted(palette(v), c.params().t);
        if (!l) return false;
        c.assign(v, *l);
    }
    return true;
}

std::size_t checked_budget(std::size_t k) {
    if (k > kMaxColors)
        throw Error(ErrorKind::TooLarge, "budget of " + std::to_string(k) + " colors exceeds " +
                                             std::to_string(kMaxColors));
    return k;
}

ColorResult run_ordered(const Graph& g, std::string algorithm, unsigned t, std::size_t formula,
                        VertexOrdering order) {
    Stopwatch clock;
    const std::size_t k = checked_budget(std::max<std::size_t>(formula, t));
    ColorResult r{PartialToneColoring({t, static_cast<unsigned>(k)}, g.order()), {}};
    r.report.algorithm = std::move(algorithm);
    r.report.formula_budget = formula;
    r.report.budget = k;
    const auto palette = Label::range(1, k);
    if (!greedy_in_order(g, r.coloring, order.order(), [&](Vertex) { return palette; }))
        throw Error(ErrorKind::InternalInvariant, r.report.algorithm + " ran out of labels within budget " +
                                                      std::to_string(k));
    r.report.order = std::move(order);
    finish_report(g, r, clock);
    return r;
}

}  // namespace

std::uint64_t least_root_at_least(unsigned p, u128 num, u128 den) {
    if (num == 0) return 0;
    if (p == 0) return 0;
    std::uint64_t lo = 0, hi = 1;
    while (mul_sat(pow_sat(hi, p), den) < num) {
        if (hi >> 63) throw Error(ErrorKind::TooLarge, "root exceeds 64 bits");
        hi <<= 1;
    }
    // Invariant: lo fails, hi satisfies.
    while (hi - lo > 1) {
        const auto mid = lo + (hi - lo) / 2;
        (mul_sat(pow_sat(mid, p), den) >= num ? hi : lo) = mid;
    }
    return hi;
}

std::size_t budget_2tone_general(std::size_t delta) {
    const u128 d = delta;
    return 2 * delta + least_root_at_least(2, 2 * d * d);
}

std::size_t budget_2tone_bipartite(std::size_t delta) {
    const u128 d = delta;
    return 2 * least_root_at_least(2, 2 * d * d);
}

std::size_t budget_2tone_chordal(std::size_t delta) {
    const u128 d = delta;
    return delta + least_root_at_least(2, 3 * d * d, 2) + 1;
}

std::size_t budget_ttone_general(std::size_t delta, unsigned t) {
    return (static_cast<std::size_t>(t) * t + t) * delta;
}

std::size_t budget_ttone_degenerate(std::size_t k, unsigned t, std::size_t r) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    const u128 base = static_cast<u128>(k) * t * t;
    const u128 num = mul_sat(pow_sat(base, t), pow_sat(r, t - 1));
    if (num == kSaturated) throw Error(ErrorKind::TooLarge, "degenerate budget overflows 128 bits");
    return k * t + least_root_at_least(t, num);
}

ColorResult color_2tone_greedy(const Graph& g) {
    return run_ordered(g, "2tone-greedy", 2, budget_2tone_general(max_degree(g)),
                       VertexOrdering::identity(g.order()));
}

ColorResult color_2tone_bipartite(const Graph& g) {
    Stopwatch clock;
    auto sides = bipartition(g);
    if (!sides) throw Error(ErrorKind::NotBipartite, "graph has an odd cycle");
    const u128 d = max_degree(g);
    const std::size_t half = least_root_at_least(2, 2 * d * d);
    const std::size_t palette_size = std::max<std::size_t>(half, 2);
    const std::size_t k = checked_budget(2 * palette_size);

    ColorResult r{PartialToneColoring({2, static_cast<unsigned>(k)}, g.order()), {}};
    r.report.algorithm = "2tone-bipartite";
    r.report.formula_budget = 2 * half;
    r.report.budget = k;
    r.report.palette_size = palette_size;

    std::vector<bool> on_a(g.order(), false);
    for (Vertex v : sides->side_a) on_a[v] = true;
    std::vector<Vertex> order = sides->side_a;
    order.insert(order.end(), sides->side_b.begin(), sides->side_b.end());
    const auto palette_a = Label::range(1, palette_size);
    const auto palette_b = Label::range(static_cast<Color>(palette_size + 1), palette_size);
    if (!greedy_in_order(g, r.coloring, order, [&](Vertex v) { return on_a[v] ? palette_a : palette_b; }))
        throw Error(ErrorKind::InternalInvariant, "bipartite palette exhausted");
    r.report.order = VertexOrdering(std::move(order));
    finish_report(g, r, clock);
    return r;
}

ColorResult color_2tone_chordal(const Graph& g) {
    auto peo = perfect_elimination_ordering(g);
    if (!peo) throw Error(ErrorKind::NotChordal, "no perfect elimination ordering");
    return run_ordered(g, "2tone-chordal", 2, budget_2tone_chordal(max_degree(g)), peo->reversed());
}

ColorResult color_ttone_greedy(const Graph& g, unsigned t) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    return run_ordered(g, "ttone-greedy", t, budget_ttone_general(max_degree(g), t),
                       VertexOrdering::identity(g.order()));
}

ColorResult color_ttone_degenerate(const Graph& g, unsigned t) {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    auto degen = degeneracy_ordering(g);
    const std::size_t k = std::max<std::size_t>(degen.degeneracy, 2);
    return run_ordered(g, "ttone-degenerate", t, budget_ttone_degenerate(k, t, max_degree(g)),
                       std::move(degen.ordering));
}

ColorResult color_tree_ttone(const Graph& g, unsigned t) {
    Stopwatch clock;
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    if (!is_forest(g)) throw Error(ErrorKind::NotATree, "input has a cycle");
    const unsigned tones = t % 2 == 0 ? t : t + 1;
    const std::size_t palettes = tones + 1;

    // Depth from the lowest vertex of each component.
    std::vector<std::uint32_t> level(g.order(), kUnreachable);
    for (const auto& comp : connected_components(g)) {
        const auto dist = bfs_distances(g, comp.front());
        for (Vertex v : comp) level[v] = dist[v];
    }
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return level[a] < level[b]; });

    const std::size_t delta = max_degree(g);
    const auto root = static_cast<std::size_t>(isqrt(delta));
    const std::size_t step = std::max<std::size_t>(root * root == delta ? root : root + 1, 1);

    for (std::size_t s = tones + step;; s += step) {
        const std::size_t k = checked_budget(palettes * s);
        PartialToneColoring c({tones, static_cast<unsigned>(k)}, g.order());
        auto palette_of = [&](Vertex v) {
            const std::size_t p = level[v] % palettes;
            return Label::range(static_cast<Color>(p * s + 1), s);
        };
        if (!greedy_in_order(g, c, order, palette_of)) continue;

        ColorResult r{tones == t ? std::move(c) : restrict_tones(c, t), {}};
        r.report.algorithm = "tree";
        r.report.budget = k;
        r.report.formula_budget = k;
        r.report.palette_size = s;
        r.report.order = VertexOrdering(std::move(order));
        finish_report(g, r, clock);
        return r;
    }
}

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && static_cast<u128>(r) * r > x) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
    return r;
}

std::size_t tree_tau2(std::size_t delta) {
    if (delta < 1) throw Error(ErrorKind::InvalidArgument, "tree_tau2 needs delta >= 1");
    const std::uint64_t x = 1 + 8 * static_cast<std::uint64_t>(delta);
    const auto s = isqrt(x);
    if (s * s == x) return (6 + s) / 2;  // ceil((5 + s) / 2)
    // s < sqrt(x) < s + 1, so the value lies strictly inside an interval of width 1/2.
    return (5 + s) / 2 + 1;
}

std::size_t ceil_log2(std::size_t x) {
    std::size_t h = 0;
    while ((std::size_t{1} << h) < x) ++h;
    return h;
}

AryTreeBound ary_tree_lower_bound(std::size_t r, unsigned t) {
    if (r < 3) throw Error(ErrorKind::InvalidArgument, "r must be >= 3");
    if (t < 2) throw Error(ErrorKind::InvalidArgument, "t must be >= 2");
    AryTreeBound out;
    out.lg_t = ceil_log2(t);
    // |V| of the complete (r-1)-ary tree of height ceil(lg t), saturating.
    std::size_t total = 0, level = 1;
    for (std::size_t h = 0; h <= out.lg_t; ++h) {
        total = total > SIZE_MAX - level ? SIZE_MAX : total + level;
        level = level > SIZE_MAX / (r - 1) ? SIZE_MAX : level * (r - 1);
    }
    out.tree_vertices = total;
    const std::size_t step = 2 * out.lg_t;
    for (std::size_t i = 0; i < total; ++i) {
        if (step * i >= t) break;
        out.value += t - step * i;
    }
    out.closed_estimate = static_cast<double>(t) * t / (8.0 * static_cast<double>(out.lg_t));
    return out;
}

}  // namespace ttone
