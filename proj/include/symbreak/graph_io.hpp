#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

// graph6: size header N(n) then the upper triangle x(0,1) x(0,2) x(1,2)
// x(0,3) ... packed big-endian into 6-bit groups biased by 63. The
// optional ">>graph6<<" prefix and a trailing newline are tolerated;
// anything else malformed throws ParseError with the byte offset.
Graph parse_graph6(std::string_view record);
std::string to_graph6(const Graph& g);

// Plain edge list: "n m" then m lines "u v" (0-based). Lines whose first
// non-blank character is '#' are ignored. Errors carry 1-based line
// numbers.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

struct ParsedGraph {
  Graph graph;
  int line = 0;  // 1-based source line of the record
};

// Reads a whole input file: an edge list when the first content line
// holds two integers, otherwise one graph6 record per line.
std::vector<ParsedGraph> read_graphs(std::istream& in);

}  // namespace symbreak
