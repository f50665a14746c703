#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// W dominates G iff every vertex is in W or adjacent to a vertex of W.
bool is_dominating(const Graph& g, VertexSet w);

// D(G,x) = sum over dominating sets W of x^|W|, by checking all 2^n subsets.
IntPoly domination_polynomial(const Graph& g, unsigned workers = 1);

// D(G,1), the number of dominating sets.
CheckedInt dominating_set_count(const Graph& g, unsigned workers = 1);

// D(G,x) = (1+x)^n - N(complement(G),x); independent of the subset scan.
IntPoly domination_polynomial_via_complement(const Graph& g, unsigned workers = 1);

}  // namespace graphpoly
