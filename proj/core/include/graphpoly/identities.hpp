#pragma once

#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/poly.hpp"

namespace graphpoly {

// Cap on m for the 2^m edge-subset sum; default 20.
int edge_subset_cap();
void set_edge_subset_cap(int m);

// Cap on k*r for the block-family sums; default 16.
int block_family_ground_cap();
void set_block_family_ground_cap(int size);

// sum over F ⊆ E of (-1)^{|F|} N(G-F,x).  Collapses to a two-term polynomial
// when G is complete bipartite plus isolated vertices, to 1 when G is empty
// with a vertex, and to 0 otherwise.
IntPoly alternating_edge_subset_sum(const Graph& g, unsigned workers = 1);

// Ground set {0..kr-1} split into r consecutive blocks of size k.  Signed sum
// over the family of unions of one proper subset per block; closed form
// (-1)^{(k-1)r}.
long long proper_block_family_signed_sum(int k, int r);

// Signed sum over the subsets containing at least one whole block; closed
// form (-1)^{kr-r+1}.
long long block_covering_family_signed_sum(int k, int r);

struct IdentityRecord {
    std::string name;
    bool pass;
    std::string left;
    std::string right;
};

struct VerificationReport {
    int n = 0;
    int m = 0;
    std::vector<IdentityRecord> records;

    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    bool skip_altsum = false;
    unsigned workers = 1;
};

// D(G,x) + N(complement(G),x) = (1+x)^n.
IdentityRecord verify_dn_identity(const Graph& g, unsigned workers = 1);

// Edge-subset sum against its closed form (zero polynomial when n = 0: the
// complex of the null graph is empty, so every summand is 0).
IdentityRecord verify_alternating_sum(const Graph& g, unsigned workers = 1);

// Every identity for one graph.  The alternating-sum record appears only
// when m is within the edge-subset cap and not skipped.
VerificationReport verify_all(const Graph& g, const VerifyOptions& options = {});

std::string report_to_text(const VerificationReport& report);
std::string report_to_json(const VerificationReport& report);

}  // namespace graphpoly
