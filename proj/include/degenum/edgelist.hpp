#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "degenum/graph.hpp"

namespace degenum {

using AnyGraph = std::variant<Graph, BipartiteGraph>;

/// Text edge-list format. First non-comment line is "graph n" or
/// "bigraph m n"; each following line holds one edge "i j". Lines starting
/// with '#' and blank lines are ignored.
AnyGraph parse_edge_list(std::istream& in);
AnyGraph parse_edge_list(const std::string& text);

std::string format_edge_list(const Graph& g);
std::string format_edge_list(const BipartiteGraph& g);
std::string format_edge_list(const AnyGraph& g);

}  // namespace degenum
