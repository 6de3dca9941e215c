#pragma once

#include <string>
#include <string_view>

#include "interlace/eulerian.hpp"
#include "interlace/graph.hpp"

namespace interlace {

// Graph text format: "n m", then m lines "u v" with 0 <= u, v < n. "u u" is a
// loop; repeated undirected edges are rejected. Errors raise ParseError with
// the offending line number.

/// Parses a graph; loops_allowed is set iff the file contains a loop.
SimpleGraph parse_graph(std::string_view text);

/// Canonical form: header, then edges (u <= v) in lexicographic order.
std::string format_graph(const SimpleGraph& g);

/// {"n":3,"edges":[[0,1],[1,2]]}
std::string graph_to_json(const SimpleGraph& g);

// Digraph text format: "n m", then m lines "tail head"; loops and repeated
// edges are allowed. Edge indices follow file order.

EulerianDigraph parse_digraph(std::string_view text);
std::string format_digraph(const EulerianDigraph& d);

}  // namespace interlace
