#include <doctest.h>

#include <cstdint>
#include <set>

#include "graphpoly/neighborhood.hpp"
#include "test_util.hpp"

using namespace graphpoly;

namespace {

// Oracle: materialize the complex as the union of the power sets of all
// open neighborhoods, deduplicated, then count members by size.
IntPoly neighborhood_oracle(const Graph& g) {
    std::set<std::uint64_t> members;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t nb = g.open_neighborhood(v).bits();
        std::uint64_t sub = nb;
        for (;;) {
            members.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & nb;
        }
    }
    IntPoly out;
    for (std::uint64_t m : members) out.add_term(__builtin_popcountll(m), CheckedInt(1));
    return out;
}

}  // namespace

TEST_CASE("complex membership for the path on three vertices") {
    Graph p3 = path_graph(3);
    std::set<std::uint64_t> expected = {0b000, 0b001, 0b010, 0b100, 0b101};
    for (std::uint64_t mask = 0; mask < 8; ++mask)
        CHECK(in_neighborhood_complex(p3, VertexSet::from_bits(mask)) ==
              (expected.count(mask) == 1));
}

TEST_CASE("complex membership edge cases") {
    // The null graph has no vertex, so even the empty set is no member.
    CHECK_FALSE(in_neighborhood_complex(empty_graph(0), VertexSet::from_bits(0)));
    // With a vertex present the empty set always is.
    CHECK(in_neighborhood_complex(empty_graph(1), VertexSet::from_bits(0)));
    // A vertex set containing v itself can only sit in other neighborhoods.
    Graph k2 = complete_graph(2);
    CHECK(in_neighborhood_complex(k2, VertexSet::single(0)));
    CHECK_FALSE(in_neighborhood_complex(k2, VertexSet::all(2)));
}

TEST_CASE("the complex is downward closed") {
    Graph g = random_gnp(8, 1, 2, 17);
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
        if (!in_neighborhood_complex(g, VertexSet::from_bits(mask))) continue;
        for (int v = 0; v < 8; ++v)
            if ((mask >> v) & 1)
                CHECK(in_neighborhood_complex(g, VertexSet::from_bits(mask & ~(1ULL << v))));
    }
}

TEST_CASE("neighborhood polynomial fixtures") {
    CHECK(neighborhood_polynomial_direct(path_graph(3)).str() == "1 + 3*x + x^2");
    CHECK(neighborhood_polynomial_direct(complete_bipartite_graph(1, 3)).str() ==
          "1 + 4*x + 3*x^2 + x^3");
    CHECK(neighborhood_polynomial_direct(complete_graph(3)).str() == "1 + 3*x + 3*x^2");
    CHECK(neighborhood_polynomial_direct(cycle_graph(4)).str() == "1 + 4*x + 2*x^2");
    CHECK(neighborhood_polynomial_direct(complete_graph(2)).str() == "1 + 2*x");
    CHECK(neighborhood_polynomial_direct(empty_graph(3)).str() == "1");
    CHECK(neighborhood_polynomial_direct(empty_graph(0)).is_zero());
    CHECK(neighborhood_polynomial_inclusion_exclusion(empty_graph(0)).is_zero());
}

TEST_CASE("complete graphs lose only the full set") {
    for (int n = 1; n <= 6; ++n) {
        IntPoly expected = IntPoly::one_plus_x_power(n) - IntPoly::monomial(n, CheckedInt(1));
        CHECK(neighborhood_polynomial_direct(complete_graph(n)) == expected);
        CHECK(neighborhood_polynomial_inclusion_exclusion(complete_graph(n)) == expected);
    }
}

TEST_CASE("both methods match the oracle exhaustively to n = 4") {
    for (int n = 0; n <= 4; ++n) {
        testutil::for_all_graphs(n, [](const Graph& g) {
            IntPoly expected = neighborhood_oracle(g);
            CHECK(neighborhood_polynomial_direct(g) == expected);
            CHECK(neighborhood_polynomial_inclusion_exclusion(g) == expected);
        });
    }
}

TEST_CASE("methods and worker counts agree on random graphs") {
    for (std::uint64_t seed = 40; seed <= 45; ++seed) {
        Graph g = random_gnp(10, 1, 2, seed);
        IntPoly direct = neighborhood_polynomial_direct(g, 1);
        CHECK(neighborhood_polynomial_direct(g, 4) == direct);
        CHECK(neighborhood_polynomial_inclusion_exclusion(g, 1) == direct);
        CHECK(neighborhood_polynomial_inclusion_exclusion(g, 4) == direct);
        CHECK(neighborhood_polynomial_inclusion_exclusion(g, 3).str() == direct.str());
    }
}
