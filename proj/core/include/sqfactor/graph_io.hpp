#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "sqfactor/graph.hpp"

namespace sqfactor {

/// Parses whitespace-separated "u v" lines. '#' starts a comment line; blank lines are skipped.
/// Tokens are non-negative integers; dense ids follow first appearance.
/// Throws format_error on self-loops, duplicate edges, bad tokens or odd token counts on a line.
Graph parse_edge_list(std::string_view text);
Graph parse_edge_list(std::istream& in);

/// One "u v" line per edge, labels, canonical dense order.
std::string to_edge_list(const Graph& g);

/// {"n": n, "edges": [[u,v],...]} with dense ids; a "labels" array is added when labels are not the identity.
std::string to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// Graphviz text. Square-only edges in `highlight` are drawn dashed; when `highlight` is empty the graph's own edges are written.
std::string to_dot(const Graph& g, std::string_view name = "G");
std::string to_dot(const Graph& host, std::span<const TaggedEdge> edges, std::string_view name = "F");

}  // namespace sqfactor
