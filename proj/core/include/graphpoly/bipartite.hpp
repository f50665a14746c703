#pragma once

#include <map>
#include <string>
#include <utility>

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

enum class BicliqueKind { Empty, CompleteBipartite, Other };

// Shape of the graph once isolated vertices are dropped.  p <= q when the
// kind is CompleteBipartite; both are 0 otherwise.
struct BicliqueForm {
    BicliqueKind kind;
    int p = 0;
    int q = 0;
};

BicliqueForm classify_complete_bipartite(const Graph& g);

// h(G,x): (-1)^{q+1}x^p + (-1)^{p+1}x^q when the graph is K_{p,q} plus
// isolated vertices, 1 when it has no edges, 0 otherwise.
IntPoly h_polynomial(const Graph& g);

// Complete bipartite subgraphs: unordered pairs {A, B} of disjoint nonempty
// vertex sets with every cross pair an edge.  Keys are (|A|, |B|) with p <= q.
// a totals the entries with both sides even, b those with both sides odd;
// mixed parity counts toward neither.  Convention pinned here: even sides are
// >= 2 by parity, odd sides >= 1, so single edges K_{1,1} land in b.
struct BipartiteCensus {
    std::map<std::pair<int, int>, CheckedInt> counts;
    CheckedInt a;
    CheckedInt b;
};

struct ParityCounts {
    CheckedInt a;
    CheckedInt b;
};

BipartiteCensus count_complete_bipartite_subgraphs(const Graph& g, unsigned workers = 1);

// a and b alone, one ordered-pair parity pass instead of the full census.
ParityCounts count_parity_classes_fast(const Graph& g, unsigned workers = 1);

// d(G) = 2^n - 1 + 2(a - b) with a, b counted on the complement.
CheckedInt dominating_count_via_bipartite(const Graph& g, unsigned workers = 1);

// N(G,x) = 1 + sum over census entries of count * [(-1)^{q+1}x^p + (-1)^{p+1}x^q].
IntPoly neighborhood_polynomial_via_bipartite(const Graph& g, unsigned workers = 1);

// {"schema":1,"n":…,"m":…,"counts":[{"p":…,"q":…,"count":"…"},…],"a":"…","b":"…"}
std::string census_to_json(const Graph& g, const BipartiteCensus& census);

}  // namespace graphpoly
