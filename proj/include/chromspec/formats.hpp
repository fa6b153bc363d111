#pragma once

#include <string>
#include <string_view>

#include "chromspec/graph.hpp"

namespace chromspec::graphs {

// graph6 short form only (n < 63); the long-form header '~' is rejected
// explicitly. Bit order over the upper triangle is (0,1),(0,2),(1,2),(0,3),...
Graph parse_graph6(std::string_view text);

// Canonical short-form graph6 line; parse_graph6(emit_graph6(g)) == g.
std::string emit_graph6(const Graph& g);

// DIMACS .col: optional "c" comments, one "p edge N M" line, "e u v" lines
// with 1-based endpoints. Duplicate edges collapse; self-loops are errors.
Graph parse_dimacs(std::string_view text);

// First line "n", then one "u v" pair per line, 0-based.
Graph parse_edge_list(std::string_view text);

enum class FileFormat { graph6, dimacs, edge_list };
std::string_view format_name(FileFormat f) noexcept;

// Leading "p edge" (after any comment lines) means DIMACS, a bare leading
// integer means edge-list, anything else is graph6.
FileFormat detect_format(std::string_view text);

Graph parse_auto(std::string_view text);
Graph parse_as(std::string_view text, FileFormat format);

} // namespace chromspec::graphs
