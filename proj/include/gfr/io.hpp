#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gfr/graph.hpp"

namespace gfr {

// Edge-list text format: optional first line "vertices: a b c ...", then one
// "u v" pair per line; '#' starts a comment. A file with no statements at all
// is a ParseError; an explicit empty graph is written as a bare "vertices:"
// line.
Graph parse_edge_list(std::string_view text);

// Undirected DOT subset: graph NAME { a -- b; c; }. Attribute brackets are
// ignored, "--" chains allowed, bare identifiers declare isolated vertices.
Graph parse_dot(std::string_view text);

// Dispatches on the leading keyword ("graph"/"strict" selects DOT).
Graph parse_graph_auto(std::string_view text);

std::string to_edge_list_text(const Graph& g);
std::string to_dot(const Graph& g, const std::string& name = "G");

nlohmann::json graph_to_json(const Graph& g);
nlohmann::json ext_nat_to_json(ExtNat v); // number | "inf"

} // namespace gfr
