#pragma once

#include <string>
#include <string_view>

#include "graphpoly/graph.hpp"

namespace graphpoly {

// Strict graph6: one size character (n ≤ 62, value n+63), then the upper
// triangle in column order packed 6 bits per character, each value +63.
// No ">>graph6<<" header, no '~' extended sizes, padding bits must be zero,
// and the string must end exactly where the bit vector does.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Edge-list text: header "n m", then m lines "u v" with 0-based endpoints.
// '#' starts a comment; blank lines are skipped.  ParseError positions are
// 1-based line numbers.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace graphpoly
