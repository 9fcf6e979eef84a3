#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "ttone/graph.hpp"
#include "ttone/label.hpp"

namespace ttone {

// Labels on a subset of the vertices of a fixed-order graph. Uncolored
// vertices hold no label.
class PartialToneColoring {
public:
    PartialToneColoring() = default;
    PartialToneColoring(ToneParams params, std::size_t n);

    const ToneParams& params() const noexcept { return params_; }
    std::size_t vertex_count() const noexcept { return labels_.size(); }

    bool is_colored(Vertex v) const { return labels_[v].has_value(); }
    const Label& label(Vertex v) const { return *labels_[v]; }
    const std::optional<Label>& slot(Vertex v) const { return labels_[v]; }

    // Unchecked store; callers are responsible for validity.
    void assign(Vertex v, const Label& l);
    void clear(Vertex v) { labels_[v].reset(); }

    std::size_t colored_count() const;
    bool is_total() const { return colored_count() == labels_.size(); }

    // Union of all assigned labels.
    Label used_colors() const;
    std::size_t used_color_count() const { return used_colors().size(); }

    // Applies a color permutation given as old color -> new color (index 0 unused).
    PartialToneColoring renamed(std::span<const Color> mapping) const;

    friend bool operator==(const PartialToneColoring&, const PartialToneColoring&) = default;

private:
    ToneParams params_;
    std::vector<std::optional<Label>> labels_;
};

struct Violation {
    Vertex u;
    Vertex v;
    std::size_t shared;
    std::uint32_t dist;

    friend bool operator==(const Violation&, const Violation&) = default;
};

// Throws InvalidLabel when a stored label has the wrong size or a color
// outside 1..k.
void check_labels(const PartialToneColoring& c);

// Every colored pair (u < v) with |f(u) ∩ f(v)| >= d(u, v). Only pairs within
// distance t can violate, so each colored vertex scans its radius-t ball.
std::vector<Violation> verify_coloring(const Graph& g, const PartialToneColoring& c);

std::vector<Color> free_colors(const Graph& g, const PartialToneColoring& c, Vertex v);

// 2-tone only: all pairs of free colors.
std::vector<Label> candidate_labels(const Graph& g, const PartialToneColoring& c, Vertex v);

// 2-tone only: candidates equal to the label of a colored second-neighbor.
std::vector<Label> obstructions(const Graph& g, const PartialToneColoring& c, Vertex v);

bool forbids(const Label& label_u, std::uint32_t dist, const Label& candidate);

// All t-subsets of 1..k that no colored vertex within distance t forbids,
// in lexicographic order.
std::vector<Label> valid_labels(const Graph& g, const PartialToneColoring& c, Vertex v);

// Copy of c with v labeled L; NotValid unless L is a valid label for v.
PartialToneColoring extend(const Graph& g, const PartialToneColoring& c, Vertex v, const Label& l);

// Keeps the `t` smallest colors of every label.
PartialToneColoring restrict_tones(const PartialToneColoring& c, unsigned t);

// The constraints colored vertices near v impose on v's label, split by how
// they are tested: neighbors remove colors, vertices at distance exactly t
// rule out one label, and those strictly between need an overlap count.
class LabelConstraints {
public:
    LabelConstraints() = default;

    // Gathers the colored vertices within distance t of v.
    static LabelConstraints collect(const Graph& g, const PartialToneColoring& c, Vertex v,
                                    BfsScratch& scratch);

    const Label& blocked_colors() const noexcept { return blocked_; }
    bool admits(const Label& candidate) const;

    // Lexicographically least admitted t-subset of `palette`.
    std::optional<Label> first_admitted(const Label& palette, unsigned t) const;

    std::vector<Label> all_admitted(const Label& palette, unsigned t) const;

private:
    struct Near {
        Label label;
        std::uint32_t dist;
    };
    Label blocked_;
    std::unordered_set<Label, LabelHash> exact_;
    std::vector<Near> overlap_;
};

}  // namespace ttone
