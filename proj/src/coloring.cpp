#include "ttone/coloring.hpp"

#include <algorithm>
#include <string>

#include "ttone/error.hpp"

namespace ttone {

PartialToneColoring::PartialToneColoring(ToneParams params, std::size_t n)
    : params_(params), labels_(n) {
    params_.validate();
}

void PartialToneColoring::assign(Vertex v, const Label& l) { labels_[v] = l; }

std::size_t PartialToneColoring::colored_count() const {
    return static_cast<std::size_t>(
        std::count_if(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); }));
}

Label PartialToneColoring::used_colors() const {
    Label all;
    for (const auto& l : labels_)
        if (l) all |= *l;
    return all;
}

PartialToneColoring PartialToneColoring::renamed(std::span<const Color> mapping) const {
    PartialToneColoring out = *this;
    for (auto& slot : out.labels_) {
        if (!slot) continue;
        Label mapped;
        for (Color c : slot->colors()) mapped.insert(mapping[c]);
        slot = mapped;
    }
    return out;
}

void check_labels(const PartialToneColoring& c) {
    const auto& p = c.params();
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (!c.is_colored(v)) continue;
        const auto& l = c.label(v);
        if (l.size() != p.t || l.max_color() > p.k)
            throw Error(ErrorKind::InvalidLabel, "vertex " + std::to_string(v) + " has label " +
                                                     l.to_string() + " under t=" + std::to_string(p.t) +
                                                     ", k=" + std::to_string(p.k));
    }
}

std::vector<Violation> verify_coloring(const Graph& g, const PartialToneColoring& c) {
    if (c.vertex_count() != g.order())
        throw Error(ErrorKind::InvalidArgument, "coloring covers " + std::to_string(c.vertex_count()) +
                                                    " vertices, graph has " + std::to_string(g.order()));
    check_labels(c);
    std::vector<Violation> out;
    BfsScratch scratch(g.order());
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!c.is_colored(u)) continue;
        for (auto [v, d] : scratch.ball(g, u, c.params().t)) {
            if (v <= u || !c.is_colored(v)) continue;
            const auto s = shared(c.label(u), c.label(v));
            if (s >= d) out.push_back({u, v, s, d});
        }
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    return out;
}

namespace {

void require_uncolored(const PartialToneColoring& c, Vertex v) {
    if (v >= c.vertex_count()) throw Error(ErrorKind::InvalidVertex, std::to_string(v));
    if (c.is_colored(v)) throw Error(ErrorKind::AlreadyColored, "vertex " + std::to_string(v));
}

void require_two_tone(const PartialToneColoring& c) {
    if (c.params().t != 2)
        throw Error(ErrorKind::InvalidArgument, "candidate/obstruction machinery is 2-tone only");
}

Label neighbor_colors(const Graph& g, const PartialToneColoring& c, Vertex v) {
    Label used;
    for (Vertex u : g.neighbors(v))
        if (c.is_colored(u)) used |= c.label(u);
    return used;
}

}  // namespace

std::vector<Color> free_colors(const Graph& g, const PartialToneColoring& c, Vertex v) {
    require_uncolored(c, v);
    const auto used = neighbor_colors(g, c, v);
    std::vector<Color> out;
    for (Color col = 1; col <= c.params().k; ++col)
        if (!used.contains(col)) out.push_back(col);
    return out;
}

std::vector<Label> candidate_labels(const Graph& g, const PartialToneColoring& c, Vertex v) {
    require_two_tone(c);
    const auto pool = free_colors(g, c, v);
    std::vector<Label> out;
    for_each_subset(pool, 2, [&](const Label& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

std::vector<Label> obstructions(const Graph& g, const PartialToneColoring& c, Vertex v) {
    require_two_tone(c);
    const auto candidates = candidate_labels(g, c, v);
    BfsScratch scratch(g.order());
    std::vector<Label> out;
    for (auto [u, d] : scratch.ball(g, v, 2)) {
        if (d != 2 || !c.is_colored(u)) continue;
        if (std::binary_search(candidates.begin(), candidates.end(), c.label(u))) out.push_back(c.label(u));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool forbids(const Label& label_u, std::uint32_t dist, const Label& candidate) {
    if (dist < 1) throw Error(ErrorKind::InvalidArgument, "distance must be >= 1");
    return shared(label_u, candidate) >= dist;
}

LabelConstraints LabelConstraints::collect(const Graph& g, const PartialToneColoring& c, Vertex v,
                                           BfsScratch& scratch) {
    LabelConstraints out;
    const auto t = c.params().t;
    for (auto [u, d] : scratch.ball(g, v, t)) {
        if (d == 0 || !c.is_colored(u)) continue;
        if (d == 1)
            out.blocked_ |= c.label(u);
        else if (d == t)
            out.exact_.insert(c.label(u));
        else
            out.overlap_.push_back({c.label(u), d});
    }
    return out;
}

bool LabelConstraints::admits(const Label& candidate) const {
    if (!candidate.disjoint(blocked_)) return false;
    if (exact_.contains(candidate)) return false;
    for (const auto& near : overlap_)
        if (shared(near.label, candidate) >= near.dist) return false;
    return true;
}

std::optional<Label> LabelConstraints::first_admitted(const Label& palette, unsigned t) const {
    const auto pool = palette.without(blocked_).colors();
    std::optional<Label> found;
    for_each_subset(pool, t, [&](const Label& l) {
        if (!admits(l)) return true;
        found = l;
        return false;
    });
    return found;
}

std::vector<Label> LabelConstraints::all_admitted(const Label& palette, unsigned t) const {
    const auto pool = palette.without(blocked_).colors();
    std::vector<Label> out;
    for_each_subset(pool, t, [&](const Label& l) {
        if (admits(l)) out.push_back(l);
        return true;
    });
    return out;
}

std::vector<Label> valid_labels(const Graph& g, const PartialToneColoring& c, Vertex v) {
    require_uncolored(c, v);
    BfsScratch scratch(g.order());
    const auto constraints = LabelConstraints::collect(g, c, v, scratch);
    return constraints.all_admitted(Label::range(1, c.params().k), c.params().t);
}

PartialToneColoring extend(const Graph& g, const PartialToneColoring& c, Vertex v, const Label& l) {
    require_uncolored(c, v);
    const auto& p = c.params();
    if (l.size() != p.t || l.max_color() > p.k)
        throw Error(ErrorKind::InvalidLabel, l.to_string());
    BfsScratch scratch(g.order());
    if (!LabelConstraints::collect(g, c, v, scratch).admits(l))
        throw Error(ErrorKind::NotValid, "label " + l.to_string() + " at vertex " + std::to_string(v));
    PartialToneColoring out = c;
    out.assign(v, l);
    return out;
}

PartialToneColoring restrict_tones(const PartialToneColoring& c, unsigned t) {
    if (t < 1 || t > c.params().t)
        throw Error(ErrorKind::InvalidArgument, "cannot restrict to " + std::to_string(t) + " tones");
    PartialToneColoring out({t, c.params().k}, c.vertex_count());
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        if (!c.is_colored(v)) continue;
        auto cs = c.label(v).colors();
        cs.resize(t);
        out.assign(v, Label(std::span<const Color>(cs)));
    }
    return out;
}

}  // namespace ttone
