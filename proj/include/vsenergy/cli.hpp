#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vsenergy/graph.hpp"

namespace vsenergy {

// Graph named on a command line, together with the symmetry it was declared
// with. Only the literal cycle:N form carries cycle symmetry.
struct ParsedGraph {
  Graph graph;
  std::optional<int> cycle_n;
};

// Grammar: path:N | cycle:N | hypercube:D | mobius:K | petersen
//          | product:SPEC,SPEC
// Throws std::invalid_argument on anything else.
ParsedGraph parse_graph_spec(const std::string& spec);

// Comma-separated labels, e.g. "0,2,4". Sorted on return; duplicates are
// rejected. The empty string is the empty set.
VertexSet parse_vertex_set(const std::string& text);

// Undirected DOT rendering with the highlighted vertices filled.
std::string emit_dot(const Graph& g, const VertexSet& highlight);

// Full command-line entry point. Returns the process exit code:
// 0 success, 1 computation error, 2 usage error. All regular output goes to
// out, diagnostics to err. Output is deterministic byte for byte.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vsenergy
