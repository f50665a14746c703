#pragma once

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// X is in the neighborhood complex iff some vertex v has X ⊆ N(v).
bool in_neighborhood_complex(const Graph& g, VertexSet x);

// N(G,x) = sum over complex members X of x^|X|, by testing all 2^n subsets.
IntPoly neighborhood_polynomial_direct(const Graph& g, unsigned workers = 1);

// Same polynomial via inclusion-exclusion over nonempty vertex sets W:
//   N(G,x) = sum (-1)^{|W|+1} (1+x)^{|common neighborhood of W|}.
IntPoly neighborhood_polynomial_inclusion_exclusion(const Graph& g, unsigned workers = 1);

}  // namespace graphpoly
