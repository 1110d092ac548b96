#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sqroot/graph.hpp"

namespace sqroot {

// Edge-list text format:
//
//   c optional comment lines
//   p <n> <m>
//   v <label>        (n lines)
//   e <label> <label> (m lines)
//
// Labels are non-empty tokens without whitespace. Blank lines are ignored.

/// Throws ParseError (with a 1-based line number) on malformed input,
/// duplicate labels, unknown endpoints, loops, duplicate edges and header
/// count mismatches.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

/// Canonical form: vertex lines sorted by label, edge lines sorted by the
/// canonical label pair.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);

} // namespace sqroot
