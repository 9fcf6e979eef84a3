#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ttone/coloring.hpp"
#include "ttone/graph.hpp"

namespace ttone {

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t forbidden_prunes = 0;  // domain wipeouts after forward checking
    std::uint64_t symmetry_prunes = 0;   // labels skipped by canonical color introduction
    double elapsed_seconds = 0.0;

    SearchStats& operator+=(const SearchStats& o) {
        nodes += o.nodes;
        forbidden_prunes += o.forbidden_prunes;
        symmetry_prunes += o.symmetry_prunes;
        elapsed_seconds += o.elapsed_seconds;
        return *this;
    }
};

struct SearchOptions {
    std::optional<std::chrono::duration<double>> timeout;
    bool symmetry_breaking = true;
};

enum class SearchStatus { Found, Absent, Timeout };

struct SearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<PartialToneColoring> coloring;
    SearchStats stats;
};

// Complete backtracking search for a t-tone k-coloring with forward checking
// over per-vertex label domains. Colors are introduced in canonical order, so
// Absent is a proof of non-colorability. Supports k <= 64.
SearchResult find_coloring(const Graph& g, unsigned t, unsigned k, const SearchOptions& options = {});

enum class TauStatus { Exact, AboveCap, Timeout };

struct TauResult {
    TauStatus status = TauStatus::AboveCap;
    unsigned value = 0;  // meaningful when status == Exact
    std::optional<PartialToneColoring> witness;
    SearchStats stats;   // summed over every k tried
};

// Least k in t..kmax admitting a coloring, searched upward. The timeout, if
// any, applies to each k separately.
TauResult exact_tau(const Graph& g, unsigned t, unsigned kmax, const SearchOptions& options = {});

// A set of distinct 2-labels.
using LabelFamily = std::vector<Label>;

// Some four distinct colors a, b, c, d with ab, cd, ac, bd all present.
bool has_complementary_pair(const LabelFamily& f);

// Three pairwise-disjoint labels.
bool has_disjoint_triple(const LabelFamily& f);

struct SevenLabelCheck {
    std::size_t families_checked = 0;
    std::vector<LabelFamily> counterexamples;
    bool holds() const { return counterexamples.empty(); }
};

// Every 7-element family of 2-subsets of {1..6} contains a complementary
// pair or a disjoint triple.
SevenLabelCheck check_seven_label_claim();

struct HeawoodCertificate {
    unsigned value = 0;
    PartialToneColoring upper;           // the 7-coloring
    std::vector<Violation> upper_violations;
    SearchResult lower;                  // search at k = 6
};

HeawoodCertificate heawood_tau2(const SearchOptions& options = {});

}  // namespace ttone
