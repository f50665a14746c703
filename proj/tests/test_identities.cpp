#include <doctest.h>

#include <cstdint>
#include <string>

#include <json.hpp>

#include "graphpoly/bipartite.hpp"
#include "graphpoly/identities.hpp"
#include "test_util.hpp"

using namespace graphpoly;

namespace {

struct EdgeCapGuard {
    int saved = edge_subset_cap();
    ~EdgeCapGuard() { set_edge_subset_cap(saved); }
};

struct GroundCapGuard {
    int saved = block_family_ground_cap();
    ~GroundCapGuard() { set_block_family_ground_cap(saved); }
};

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("alternating sum fixtures") {
    CHECK(alternating_edge_subset_sum(complete_graph(2)).str() == "2*x");
    CHECK(alternating_edge_subset_sum(path_graph(3)).str() == "-x + x^2");
    CHECK(alternating_edge_subset_sum(path_graph(4)).str() == "0");
    CHECK(alternating_edge_subset_sum(cycle_graph(4)).str() == "-2*x^2");
    CHECK(alternating_edge_subset_sum(complete_bipartite_graph(1, 3)).str() == "x + x^3");
    CHECK(alternating_edge_subset_sum(empty_graph(3)).str() == "1");
    CHECK(alternating_edge_subset_sum(empty_graph(0)).str() == "0");
    CHECK(alternating_edge_subset_sum(complete_graph(3)).str() == "0");
}

TEST_CASE("alternating sum collapses to the shape classification") {
    for (int n = 1; n <= 4; ++n) {
        testutil::for_all_graphs(n, [](const Graph& g) {
            CHECK(alternating_edge_subset_sum(g) == h_polynomial(g));
        });
    }
}

TEST_CASE("alternating sum respects the edge cap") {
    EdgeCapGuard guard;
    set_edge_subset_cap(3);
    CHECK_THROWS_AS(alternating_edge_subset_sum(cycle_graph(4)), CapacityError);
    CHECK(alternating_edge_subset_sum(path_graph(4)).is_zero());
    CHECK_THROWS_AS(set_edge_subset_cap(-1), InputError);
    CHECK_THROWS_AS(set_edge_subset_cap(63), InputError);
}

TEST_CASE("alternating sum is worker-count invariant") {
    Graph g = random_gnp(6, 1, 2, 31);
    REQUIRE(g.edge_count() <= 20);
    IntPoly one = alternating_edge_subset_sum(g, 1);
    CHECK(alternating_edge_subset_sum(g, 4) == one);
    CHECK(alternating_edge_subset_sum(g, 4).str() == one.str());
}

TEST_CASE("signed sum over products of proper block subsets") {
    CHECK(proper_block_family_signed_sum(1, 1) == 1);
    CHECK(proper_block_family_signed_sum(1, 5) == 1);
    CHECK(proper_block_family_signed_sum(2, 1) == -1);
    CHECK(proper_block_family_signed_sum(2, 2) == 1);
    CHECK(proper_block_family_signed_sum(3, 1) == 1);
    CHECK(proper_block_family_signed_sum(3, 2) == 1);
    CHECK(proper_block_family_signed_sum(4, 1) == -1);
}

TEST_CASE("signed sum over block-covering subsets") {
    CHECK(block_covering_family_signed_sum(1, 1) == -1);
    CHECK(block_covering_family_signed_sum(2, 1) == 1);
    CHECK(block_covering_family_signed_sum(1, 2) == -1);
    CHECK(block_covering_family_signed_sum(2, 2) == -1);
    CHECK(block_covering_family_signed_sum(3, 2) == -1);
}

TEST_CASE("block-family closed forms hold on the whole small range") {
    for (int k = 1; k <= 10; ++k) {
        for (int r = 1; k * r <= 10; ++r) {
            CHECK(proper_block_family_signed_sum(k, r) == sign((k - 1) * r));
            CHECK(block_covering_family_signed_sum(k, r) == sign(k * r - r + 1));
        }
    }
}

TEST_CASE("block-family caps and argument checks") {
    GroundCapGuard guard;
    CHECK_THROWS_AS(proper_block_family_signed_sum(0, 3), InputError);
    CHECK_THROWS_AS(block_covering_family_signed_sum(2, -1), InputError);
    CHECK_THROWS_AS(proper_block_family_signed_sum(5, 4), CapacityError);
    set_block_family_ground_cap(8);
    CHECK_THROWS_AS(block_covering_family_signed_sum(3, 3), CapacityError);
    CHECK(block_covering_family_signed_sum(2, 4) == -1);
    CHECK_THROWS_AS(set_block_family_ground_cap(0), InputError);
    CHECK_THROWS_AS(set_block_family_ground_cap(31), InputError);
}

TEST_CASE("the covering family splits into the two documented parts") {
    // Parts: subsets containing the last block and no earlier one, and
    // subsets containing an earlier block with arbitrary overlap of the last.
    for (int k = 1; k <= 9; ++k) {
        for (int r = 1; k * r <= 9; ++r) {
            std::uint64_t last = ((1ULL << k) - 1) << ((r - 1) * k);
            long long covering = 0, part_last = 0, part_earlier = 0;
            for (std::uint64_t a = 0; a < (1ULL << (k * r)); ++a) {
                bool earlier = false;
                for (int j = 0; j + 1 < r; ++j) {
                    std::uint64_t block = ((1ULL << k) - 1) << (j * k);
                    if ((a & block) == block) earlier = true;
                }
                bool has_last = (a & last) == last;
                int s = __builtin_popcountll(a) % 2 == 0 ? 1 : -1;
                if (earlier || has_last) covering += s;
                if (has_last && !earlier) part_last += s;
                if (earlier) part_earlier += s;
            }
            CHECK(part_last + part_earlier == covering);
            CHECK(part_last == sign(k * r - r + 1));
            CHECK(part_earlier == 0);
            CHECK(covering == block_covering_family_signed_sum(k, r));
        }
    }
}

TEST_CASE("domination-neighborhood complement identity records") {
    IdentityRecord rec = verify_dn_identity(complete_graph(3));
    CHECK(rec.name == "dn-complement");
    CHECK(rec.pass);
    CHECK(rec.left == "1 + 3*x + 3*x^2 + x^3");
    CHECK(rec.left == rec.right);

    CHECK(verify_dn_identity(path_graph(3)).pass);
    CHECK(verify_dn_identity(empty_graph(4)).pass);
    CHECK(verify_dn_identity(empty_graph(0)).pass);
}

TEST_CASE("alternating-sum records") {
    IdentityRecord rec = verify_alternating_sum(path_graph(4));
    CHECK(rec.name == "altsum");
    CHECK(rec.pass);
    CHECK(rec.left == "0");

    // The null graph has no unit constant: its complex is empty.
    rec = verify_alternating_sum(empty_graph(0));
    CHECK(rec.pass);
    CHECK(rec.left == "0");
    CHECK(rec.right == "0");
}

TEST_CASE("verify_all aggregates the full battery") {
    VerificationReport report = verify_all(cycle_graph(4));
    CHECK(report.n == 4);
    CHECK(report.m == 4);
    REQUIRE(report.records.size() == 7);
    CHECK(report.records[0].name == "dn-complement");
    CHECK(report.records[1].name == "biclique-count");
    CHECK(report.records[2].name == "odd-domination");
    CHECK(report.records[3].name == "nbpoly-inclexcl");
    CHECK(report.records[4].name == "nbpoly-bipartite");
    CHECK(report.records[5].name == "census-parity");
    CHECK(report.records[6].name == "altsum");
    CHECK(report.all_pass());
    CHECK(report.records[1].left == "11");

    VerifyOptions skip;
    skip.skip_altsum = true;
    CHECK(verify_all(cycle_graph(4), skip).records.size() == 6);

    EdgeCapGuard guard;
    set_edge_subset_cap(3);
    CHECK(verify_all(cycle_graph(4)).records.size() == 6);
}

TEST_CASE("verify_all passes on sampled graphs") {
    CHECK(verify_all(random_gnp(10, 1, 2, 7)).all_pass());
    for (int n = 6; n <= 9; ++n) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            VerifyOptions options;
            options.workers = 2;
            CHECK(verify_all(random_gnp(n, 1, 2, seed), options).all_pass());
        }
    }
    CHECK(verify_all(empty_graph(0)).all_pass());
    CHECK(verify_all(complete_graph(1)).all_pass());
}

TEST_CASE("report rendering") {
    VerificationReport report = verify_all(complete_graph(1));
    CHECK(report_to_text(report) ==
          "graph: n = 1, m = 0\n"
          "PASS dn-complement: left = 1 + x, right = 1 + x\n"
          "PASS biclique-count: left = 1, right = 1\n"
          "PASS odd-domination: left = odd, right = odd\n"
          "PASS nbpoly-inclexcl: left = 1, right = 1\n"
          "PASS nbpoly-bipartite: left = 1, right = 1\n"
          "PASS census-parity: left = (a=0, b=0), right = (a=0, b=0)\n"
          "PASS altsum: left = 1, right = 1\n"
          "7 of 7 identities hold\n");

    auto doc = nlohmann::json::parse(report_to_json(report));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("n") == 1);
    CHECK(doc.at("m") == 0);
    CHECK(doc.at("all_pass") == true);
    REQUIRE(doc.at("identities").size() == 7);
    CHECK(doc.at("identities")[0].at("name") == "dn-complement");
    CHECK(doc.at("identities")[0].at("pass") == true);
    CHECK(doc.at("identities")[2].at("left") == "odd");

    VerificationReport failing;
    failing.n = 2;
    failing.m = 1;
    failing.records.push_back({"demo-pass", true, "1", "1"});
    failing.records.push_back({"demo-fail", false, "1", "2"});
    CHECK_FALSE(failing.all_pass());
    CHECK(report_to_text(failing) ==
          "graph: n = 2, m = 1\n"
          "PASS demo-pass: left = 1, right = 1\n"
          "FAIL demo-fail: left = 1, right = 2\n"
          "1 of 2 identities hold\n");
    CHECK(nlohmann::json::parse(report_to_json(failing)).at("all_pass") == false);
}
