#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sunspot/graph.hpp"

namespace sunspot {

// graph6: printable encoding of a simple graph, 6 bits per character offset
// by 63, upper-triangle bits in column order. The ">>graph6<<" header is
// tolerated and stripped on input. Parse failures throw Graph6ParseError
// with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// Plain text alternative: "n m" header line, then one "u v" line per edge.
Graph parse_edge_list(std::istream& in);
std::string serialize_edge_list(const Graph& g);

// One graph6 string per line; blank lines and ">>graph6<<" headers skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

// Loads graphs from a file ("-" = stdin). Detects the format: a first line
// of two decimal integers is an edge list (one graph per file), anything
// else is graph6 lines.
std::vector<Graph> load_graphs(const std::string& path);

} // namespace sunspot
