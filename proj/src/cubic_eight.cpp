#include "ttone/cubic_eight.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ttone/error.hpp"

namespace ttone {

std::string_view to_string(CycleCaseTag tag) {
    switch (tag) {
    case CycleCaseTag::IdenticalEnds: return "IdenticalEnds";
    case CycleCaseTag::DisjointTriple: return "DisjointTriple";
    case CycleCaseTag::Overlapping: return "Overlapping";
    }
    return "?";
}

CycleCase classify_cycle_case(const Label& before, const Label& middle, const Label& after) {
    if (!before.disjoint(after))
        throw Error(ErrorKind::InternalInvariant, "u_{k-1} and u_1 share a color");
    if (middle == before) return {CycleCaseTag::IdenticalEnds, false};
    if (middle == after) return {CycleCaseTag::IdenticalEnds, true};
    if (middle.disjoint(before) && middle.disjoint(after)) return {CycleCaseTag::DisjointTriple, false};
    if (!middle.disjoint(before)) return {CycleCaseTag::Overlapping, false};
    return {CycleCaseTag::Overlapping, true};
}

std::string CubicTrace::to_text() const {
    std::ostringstream os;
    os << "components " << components << "\n"
       << "k4_blocks " << k4_blocks << "\n"
       << "low_degree_steps " << low_degree_steps << "\n"
       << "k23_steps " << k23_steps << "\n"
       << "cycle_steps " << cycle_steps << "\n"
       << "case_identical_ends " << case_counts[0] << "\n"
       << "case_disjoint_triple " << case_counts[1] << "\n"
       << "case_overlapping " << case_counts[2] << "\n"
       << "reflections " << reflections << "\n"
       << "lemma_shortfalls " << lemma_shortfalls << "\n"
       << "fallbacks " << fallbacks << "\n";
    for (const auto& line : log) os << "step " << line << "\n";
    return os.str();
}

namespace {

const ToneParams kEight{2, kCubicColors};

void require_subcubic(const Graph& g) {
    if (max_degree(g) > 3)
        throw Error(ErrorKind::DegreeTooHigh, "maximum degree " + std::to_string(max_degree(g)) + " > 3");
}

void require_valid(const Graph& g, const PartialToneColoring& c, const char* where) {
    if (!verify_coloring(g, c).empty())
        throw Error(ErrorKind::InternalInvariant, std::string("invalid partial coloring after ") + where);
}

std::optional<Label> least_valid(const Graph& g, const PartialToneColoring& c, Vertex v, BfsScratch& scratch,
                                 const std::function<bool(const Label&)>& allowed = {}) {
    const auto constraints = LabelConstraints::collect(g, c, v, scratch);
    if (!allowed) return constraints.first_admitted(Label::range(1, kCubicColors), 2);
    for (const auto& l : constraints.all_admitted(Label::range(1, kCubicColors), 2))
        if (allowed(l)) return l;
    return std::nullopt;
}

void color_or_fail(const Graph& g, PartialToneColoring& c, Vertex v, BfsScratch& scratch, const char* where) {
    auto l = least_valid(g, c, v, scratch);
    if (!l)
        throw Error(ErrorKind::InternalInvariant,
                    std::string("no valid label for vertex ") + std::to_string(v) + " in " + where);
    c.assign(v, *l);
}

PartialToneColoring lift(const Graph& g, std::span<const Vertex> kept, const PartialToneColoring& child) {
    PartialToneColoring out(kEight, g.order());
    for (std::size_t i = 0; i < kept.size(); ++i) out.assign(kept[i], child.label(static_cast<Vertex>(i)));
    return out;
}

std::vector<Vertex> complement(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : removed) gone[v] = true;
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

// Greedy pass over one component in non-increasing distance from the anchor.
void color_component_from(const Graph& g, PartialToneColoring& c, Vertex anchor) {
    const auto dist = bfs_distances(g, anchor);
    std::vector<Vertex> order;
    for (Vertex v = 0; v < g.order(); ++v)
        if (dist[v] != kUnreachable) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    BfsScratch scratch(g.order());
    for (Vertex v : order) color_or_fail(g, c, v, scratch, "low-degree pass");
}

class CubicColorer {
public:
    explicit CubicColorer(CubicTrace& trace) : trace_(trace) {}

    PartialToneColoring solve(const Graph& g) {
        PartialToneColoring c(kEight, g.order());
        if (g.order() == 0) return c;
        const auto comps = connected_components(g);
        if (comps.size() > 1) {
            trace_.components += comps.size();
            for (const auto& comp : comps) {
                auto part = solve_connected(induced_subgraph(g, comp));
                for (std::size_t i = 0; i < comp.size(); ++i) c.assign(comp[i], part.label(static_cast<Vertex>(i)));
            }
            return c;
        }
        trace_.components += 1;
        return solve_connected(g);
    }

    PartialToneColoring solve_connected(const Graph& g) {
        const std::size_t n = g.order();
        PartialToneColoring c(kEight, n);
        if (n == 4 && g.size() == 6) {
            ++trace_.k4_blocks;
            trace_.log.push_back("n=4 K4");
            for (Vertex v = 0; v < 4; ++v) c.assign(v, Label::range(2 * v + 1, 2));
            return c;
        }
        for (Vertex v = 0; v < n; ++v)
            if (g.degree(v) <= 2) {
                ++trace_.low_degree_steps;
                trace_.log.push_back("n=" + std::to_string(n) + " low-degree anchor=" + std::to_string(v));
                color_component_from(g, c, v);
                return c;
            }

        if (auto k23 = find_induced_k23(g)) {
            ++trace_.k23_steps;
            trace_.log.push_back("n=" + std::to_string(n) + " k23");
            const Vertex five[] = {k23->x1, k23->x2, k23->y1, k23->y2, k23->y3};
            const auto keep = complement(g, five);
            auto outer = lift(g, keep, solve(induced_subgraph(g, keep)));
            require_valid(g, outer, "K23 reduction");
            return resolve_k23(g, *k23, outer);
        }

        auto cyc = shortest_cycle(g);
        if (!cyc) throw Error(ErrorKind::InternalInvariant, "3-regular graph without a cycle");
        ++trace_.cycle_steps;
        auto red = reduce_cycle(g, *cyc);
        trace_.log.push_back("n=" + std::to_string(n) + " cycle len=" + std::to_string(red.cycle.size()) +
                             " added=" + std::to_string(red.added.size()));
        auto outer = lift(g, red.kept, solve(red.reduced));
        require_valid(g, outer, "cycle reduction");
        return extend_around_cycle(g, red, outer, &trace_);
    }

private:
    CubicTrace& trace_;
};

}  // namespace

CubicResult color_cubic_8(const Graph& g) {
    require_subcubic(g);
    CubicResult out;
    CubicColorer colorer(out.trace);
    out.coloring = colorer.solve(g);
    if (!out.coloring.is_total() || !verify_coloring(g, out.coloring).empty())
        throw Error(ErrorKind::InternalInvariant, "cubic colorer produced an invalid coloring");
    return out;
}

PartialToneColoring color_from_low_degree(const Graph& g, Vertex anchor) {
    if (anchor >= g.order()) throw Error(ErrorKind::InvalidVertex, std::to_string(anchor));
    require_subcubic(g);
    if (g.degree(anchor) > 2)
        throw Error(ErrorKind::BadAnchor, "anchor " + std::to_string(anchor) + " has degree 3");
    PartialToneColoring c(kEight, g.order());
    color_component_from(g, c, anchor);
    for (const auto& comp : connected_components(g)) {
        if (c.is_colored(comp.front())) continue;
        auto part = color_cubic_8(induced_subgraph(g, comp)).coloring;
        for (std::size_t i = 0; i < comp.size(); ++i) c.assign(comp[i], part.label(static_cast<Vertex>(i)));
    }
    return c;
}

PartialToneColoring resolve_k23(const Graph& g, const InducedK23& sub, const PartialToneColoring& outer) {
    PartialToneColoring c = outer;
    const Vertex ys[] = {sub.y1, sub.y2, sub.y3};
    Label on_attachments;
    for (Vertex y : ys)
        for (Vertex u : g.neighbors(y))
            if (u != sub.x1 && u != sub.x2 && c.is_colored(u)) on_attachments |= c.label(u);
    Color shared_color = 0;
    for (Color col = 1; col <= kCubicColors && !shared_color; ++col)
        if (!on_attachments.contains(col)) shared_color = col;
    if (!shared_color) throw Error(ErrorKind::InternalInvariant, "every color appears on the K23 attachments");

    BfsScratch scratch(g.order());
    for (Vertex y : ys) {
        auto l = least_valid(g, c, y, scratch, [&](const Label& cand) { return cand.contains(shared_color); });
        if (!l) throw Error(ErrorKind::InternalInvariant, "no partner color for y" + std::to_string(y));
        c.assign(y, *l);
    }
    color_or_fail(g, c, sub.x1, scratch, "K23 x1");
    color_or_fail(g, c, sub.x2, scratch, "K23 x2");
    return c;
}

CycleReduction reduce_cycle(const Graph& g, std::span<const Vertex> cycle) {
    const std::size_t k = cycle.size();
    if (k < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<bool> on_cycle(g.order(), false);
    for (Vertex v : cycle) on_cycle[v] = true;

    std::vector<Vertex> outer(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vertex> off;
        for (Vertex u : g.neighbors(cycle[i]))
            if (!on_cycle[u]) off.push_back(u);
        if (off.size() != 1 || g.degree(cycle[i]) != 3)
            throw Error(ErrorKind::InternalInvariant, "cycle vertex " + std::to_string(cycle[i]) +
                                                          " lacks exactly one off-cycle neighbor");
        outer[i] = off[0];
    }

    CycleReduction red;
    std::size_t shift = 0;
    if (k == 3) {
        // u_1 must differ from both u_2 and u_3.
        bool found = false;
        for (std::size_t r = 0; r < 3 && !found; ++r)
            if (outer[r] != outer[(r + 1) % 3] && outer[r] != outer[(r + 2) % 3]) {
                shift = r;
                found = true;
            }
        if (!found) throw Error(ErrorKind::InternalInvariant, "triangle with a common outer neighbor (K4)");
    } else {
        for (std::size_t i = 0; i < k; ++i)
            if (outer[(i + k - 1) % k] == outer[(i + 1) % k])
                throw Error(ErrorKind::InternalInvariant, "u_{i-1} = u_{i+1} on a shortest cycle");
    }
    for (std::size_t i = 0; i < k; ++i) {
        red.cycle.push_back(cycle[(i + shift) % k]);
        red.outer.push_back(outer[(i + shift) % k]);
    }

    const auto& u = red.outer;
    std::vector<Edge> bridges{{u[k - 2], u[0]}};
    if (k >= 4) bridges.emplace_back(u[k - 1], u[1]);
    for (auto e : bridges)
        if (!g.adjacent(e.first, e.second)) red.added.push_back(e);

    red.kept = complement(g, red.cycle);
    std::vector<Vertex> index(g.order(), UINT32_MAX);
    for (std::size_t i = 0; i < red.kept.size(); ++i) index[red.kept[i]] = static_cast<Vertex>(i);
    std::vector<Edge> extra;
    for (auto [a, b] : red.added) extra.emplace_back(index[a], index[b]);
    red.reduced = with_edges_added(induced_subgraph(g, red.kept), extra);
    if (max_degree(red.reduced) > 3)
        throw Error(ErrorKind::InternalInvariant, "cycle reduction produced a vertex of degree > 3");
    return red;
}

namespace {

// Maps anchor colors onto canonical names; the rest follow in ascending order.
std::vector<Color> canonical_renaming(std::span<const Color> anchors) {
    std::vector<Color> map(kCubicColors + 1, 0);
    Color next = 1;
    for (Color c : anchors)
        if (!map[c]) map[c] = next++;
    for (Color c = 1; c <= kCubicColors; ++c)
        if (!map[c]) map[c] = next++;
    return map;
}

std::vector<Color> inverse(std::span<const Color> map) {
    std::vector<Color> inv(map.size(), 0);
    for (Color c = 1; c < map.size(); ++c) inv[map[c]] = c;
    return inv;
}

bool exhaustive_cycle(const Graph& g, PartialToneColoring& c, std::span<const Vertex> cycle, std::size_t i,
                      BfsScratch& scratch) {
    if (i == cycle.size()) return true;
    const auto options = LabelConstraints::collect(g, c, cycle[i], scratch)
                             .all_admitted(Label::range(1, kCubicColors), 2);
    for (const auto& l : options) {
        c.assign(cycle[i], l);
        if (exhaustive_cycle(g, c, cycle, i + 1, scratch)) return true;
        c.clear(cycle[i]);
    }
    return false;
}

}  // namespace

PartialToneColoring extend_around_cycle(const Graph& g, const CycleReduction& red,
                                        const PartialToneColoring& outer, CubicTrace* trace) {
    CubicTrace local;
    CubicTrace& tr = trace ? *trace : local;
    const std::size_t k = red.cycle.size();
    for (Vertex v = 0; v < g.order(); ++v) {
        const bool on_cycle = std::find(red.cycle.begin(), red.cycle.end(), v) != red.cycle.end();
        if (on_cycle == outer.is_colored(v))
            throw Error(ErrorKind::InvalidArgument, "outer coloring must leave exactly the cycle uncolored");
    }

    std::vector<Vertex> cyc = red.cycle, us = red.outer;
    const auto& before = outer.label(us[k - 2]);
    const auto& middle = outer.label(us[k - 1]);
    const auto& after = outer.label(us[0]);
    if (k >= 4 && !middle.disjoint(outer.label(us[1])))
        throw Error(ErrorKind::InternalInvariant, "u_k and u_2 share a color");
    const auto kase = classify_cycle_case(before, middle, after);
    if (kase.reflected) {
        // Walk the other way around v_k: v'_i = v_{k-i}.
        for (std::size_t i = 0; i + 1 < k; ++i) {
            cyc[i] = red.cycle[k - 2 - i];
            us[i] = red.outer[k - 2 - i];
        }
        ++tr.reflections;
    }
    ++tr.case_counts[static_cast<std::size_t>(kase.tag)];

    const auto a = outer.label(us[k - 2]).colors();  // u_{k-1}
    const auto b = outer.label(us[k - 1]).colors();  // u_k
    const auto l1 = outer.label(us[0]).colors();     // u_1
    std::vector<Color> anchors;
    switch (kase.tag) {
    case CycleCaseTag::IdenticalEnds: anchors = {a[0], a[1], l1[0], l1[1]}; break;
    case CycleCaseTag::DisjointTriple: anchors = {a[0], a[1], b[0], b[1], l1[0], l1[1]}; break;
    case CycleCaseTag::Overlapping: {
        const Color common = std::find(b.begin(), b.end(), a[0]) != b.end() ? a[0] : a[1];
        const Color a_other = common == a[0] ? a[1] : a[0];
        const Color b_other = common == b[0] ? b[1] : b[0];
        anchors = {common, a_other, b_other, l1[0], l1[1]};
        break;
    }
    }
    const auto to_canon = canonical_renaming(anchors);
    const auto from_canon = inverse(to_canon);
    const auto start = outer.renamed(to_canon);

    // Label families for v_1 (and v_2 in the triangle with disjoint anchors).
    const bool triangle = k == 3;
    const bool three_in_l = Label(std::span<const Color>(l1)).contains(b[0] == a[0] || b[0] == a[1] ? b[1] : b[0]);
    std::function<bool(const Label&)> first_family, second_family;
    std::size_t promised_first = 0;
    switch (kase.tag) {
    case CycleCaseTag::IdenticalEnds:
        first_family = [](const Label& l) { return l.contains(1) || l.contains(2); };
        promised_first = 5;
        break;
    case CycleCaseTag::DisjointTriple:
        if (triangle) {
            first_family = [](const Label& l) {
                return l == Label{1, 3} || l == Label{2, 3} || l == Label{3, 7} || l == Label{3, 8};
            };
            second_family = [](const Label& l) { return l.contains(4) && l.min_color() == 4; };
            promised_first = 1;
        } else {
            first_family = [](const Label& l) {
                return l == Label{1, 3} || l == Label{1, 4} || l == Label{2, 3} || l == Label{2, 4};
            };
            promised_first = 2;
        }
        break;
    case CycleCaseTag::Overlapping:
        first_family = [](const Label& l) { return l.contains(1) || l.contains(3); };
        promised_first = three_in_l ? 2 : 5;
        break;
    }

    BfsScratch scratch(g.order());
    auto options_at = [&](const PartialToneColoring& c, std::size_t i) {
        auto all = LabelConstraints::collect(g, c, cyc[i], scratch).all_admitted(Label::range(1, kCubicColors), 2);
        const auto& family = i == 0 ? first_family : (i == 1 ? second_family : std::function<bool(const Label&)>{});
        if (family) std::erase_if(all, [&](const Label& l) { return !family(l); });
        return all;
    };

    // Lemma-driven walk: at each step keep the first label that leaves the
    // next vertex its promised number of extensions.
    PartialToneColoring c = start;
    bool done = true;
    for (std::size_t i = 0; i < k && done; ++i) {
        const auto options = options_at(c, i);
        if (i == 0 && options.size() < promised_first) ++tr.lemma_shortfalls;
        if (options.empty()) {
            done = false;
            break;
        }
        if (i + 1 == k) {
            c.assign(cyc[i], options.front());
            break;
        }
        const std::size_t need = (i + 2 == k || (triangle && second_family)) ? 1 : 3;
        std::optional<Label> pick;
        std::size_t best_count = 0;
        std::optional<Label> best;
        for (const auto& l : options) {
            c.assign(cyc[i], l);
            const auto count = options_at(c, i + 1).size();
            c.clear(cyc[i]);
            if (count >= need) {
                pick = l;
                break;
            }
            if (count > best_count) {
                best_count = count;
                best = l;
            }
        }
        if (!pick) {
            ++tr.lemma_shortfalls;
            pick = best;
        }
        if (!pick) {
            done = false;
            break;
        }
        c.assign(cyc[i], *pick);
    }

    if (!done) {
        ++tr.fallbacks;
        c = start;
        if (!exhaustive_cycle(g, c, cyc, 0, scratch))
            throw Error(ErrorKind::InternalInvariant, "no completion around a cycle of length " + std::to_string(k));
    }
    tr.log.push_back(std::string("  case=") + std::string(to_string(kase.tag)) +
                     (kase.reflected ? " reflected" : "") + (done ? "" : " fallback"));
    return c.renamed(from_canon);
}

}  // namespace ttone
