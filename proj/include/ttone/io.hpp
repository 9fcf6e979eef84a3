#pragma once

#include <string>

#include "ttone/coloring.hpp"
#include "ttone/exact_solver.hpp"
#include "ttone/graph.hpp"
#include "ttone/greedy_bounds.hpp"

namespace ttone::io {

// Edge-list text: '#' lines are comments, the first other line is "n m",
// followed by m lines "u v" with 0-based ids. Errors carry the line number.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Coloring documents: {"algorithm", "k", "labels": {"<vertex>": [colors]},
// "stats", "t", "used", "valid"} with sorted keys. Wall-clock times are left
// out so identical runs produce identical bytes.
std::string write_coloring_json(const PartialToneColoring& c, const BoundReport& report);
std::string write_coloring_json(const PartialToneColoring& c, const SearchStats& stats, bool valid);

// Reads the "t", "k" and "labels" fields of a coloring document for a graph
// on n vertices.
PartialToneColoring read_coloring_json(const std::string& text, std::size_t n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace ttone::io
