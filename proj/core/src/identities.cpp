#include "graphpoly/identities.hpp"

#include <atomic>
#include <cstdint>

#include <json.hpp>

#include "graphpoly/bipartite.hpp"
#include "graphpoly/domination.hpp"
#include "graphpoly/neighborhood.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {

namespace {

std::atomic<int> g_edge_subset_cap{20};
std::atomic<int> g_block_family_ground_cap{16};

}  // namespace

int edge_subset_cap() { return g_edge_subset_cap.load(); }

void set_edge_subset_cap(int m) {
    if (m < 0 || m > 62) throw InputError("edge-subset cap must be between 0 and 62");
    g_edge_subset_cap.store(m);
}

int block_family_ground_cap() { return g_block_family_ground_cap.load(); }

void set_block_family_ground_cap(int size) {
    if (size < 1 || size > 30) throw InputError("ground cap must be between 1 and 30");
    g_block_family_ground_cap.store(size);
}

IntPoly alternating_edge_subset_sum(const Graph& g, unsigned workers) {
    int m = g.edge_count();
    if (m > edge_subset_cap())
        throw CapacityError("graph has " + std::to_string(m) + " edges; edge-subset cap is " +
                            std::to_string(edge_subset_cap()));
    EdgeSet all = g.edges();
    std::uint64_t total = 1ULL << m;

    unsigned w = resolve_workers(workers);
    std::size_t ntasks = static_cast<std::size_t>(w) * 4;
    if (ntasks > total) ntasks = static_cast<std::size_t>(total);
    if (ntasks == 0) ntasks = 1;
    std::uint64_t chunk = (total + ntasks - 1) / ntasks;

    std::vector<IntPoly> partial(ntasks);
    parallel_tasks(w, ntasks, [&](std::size_t t) {
        std::uint64_t begin = chunk * t;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        IntPoly acc;
        EdgeSet removed;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            removed.clear();
            std::uint64_t rest = mask;
            while (rest) {
                removed.push_back(all[static_cast<std::size_t>(__builtin_ctzll(rest))]);
                rest &= rest - 1;
            }
            IntPoly np = neighborhood_polynomial_inclusion_exclusion(g.delete_edges(removed));
            if (__builtin_popcountll(mask) % 2 == 0)
                acc += np;
            else
                acc -= np;
        }
        partial[t] = std::move(acc);
    });

    IntPoly sum;
    for (std::size_t t = 0; t < ntasks; ++t) sum += partial[t];
    return sum;
}

namespace {

void check_blocks(int k, int r) {
    if (k < 1 || r < 1) throw InputError("block size and block count must be positive");
    if (k > block_family_ground_cap() || r > block_family_ground_cap() ||
        k * r > block_family_ground_cap())
        throw CapacityError("ground set of " + std::to_string(k) + "*" + std::to_string(r) +
                            " elements exceeds cap " + std::to_string(block_family_ground_cap()));
}

// Block j of size k holds elements jk..jk+k-1.
std::uint64_t block_mask(int k, int j) { return ((1ULL << k) - 1) << (j * k); }

}  // namespace

long long proper_block_family_signed_sum(int k, int r) {
    check_blocks(k, r);
    std::uint64_t total = 1ULL << (k * r);
    long long sum = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool all_proper = true;
        for (int j = 0; j < r; ++j) {
            std::uint64_t block = block_mask(k, j);
            if ((a & block) == block) {
                all_proper = false;
                break;
            }
        }
        if (all_proper) sum += __builtin_popcountll(a) % 2 == 0 ? 1 : -1;
    }
    return sum;
}

long long block_covering_family_signed_sum(int k, int r) {
    check_blocks(k, r);
    std::uint64_t total = 1ULL << (k * r);
    long long sum = 0;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool covers = false;
        for (int j = 0; j < r; ++j) {
            std::uint64_t block = block_mask(k, j);
            if ((a & block) == block) {
                covers = true;
                break;
            }
        }
        if (covers) sum += __builtin_popcountll(a) % 2 == 0 ? 1 : -1;
    }
    return sum;
}

namespace {

IdentityRecord make_record(std::string name, const IntPoly& left, const IntPoly& right) {
    return {std::move(name), left == right, left.str(), right.str()};
}

IdentityRecord make_record(std::string name, const CheckedInt& left, const CheckedInt& right) {
    return {std::move(name), left == right, left.str(), right.str()};
}

}  // namespace

IdentityRecord verify_dn_identity(const Graph& g, unsigned workers) {
    IntPoly left = domination_polynomial(g, workers) +
                   neighborhood_polynomial_direct(g.complement(), workers);
    return make_record("dn-complement", left, IntPoly::one_plus_x_power(g.vertex_count()));
}

IdentityRecord verify_alternating_sum(const Graph& g, unsigned workers) {
    IntPoly computed = alternating_edge_subset_sum(g, workers);
    IntPoly expected = g.vertex_count() == 0 ? IntPoly::zero() : h_polynomial(g);
    return make_record("altsum", computed, expected);
}

VerificationReport verify_all(const Graph& g, const VerifyOptions& options) {
    unsigned w = options.workers;
    VerificationReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();

    report.records.push_back(verify_dn_identity(g, w));

    CheckedInt d_scan = dominating_set_count(g, w);
    report.records.push_back(make_record("biclique-count", d_scan, dominating_count_via_bipartite(g, w)));

    report.records.push_back(
        {"odd-domination", d_scan.is_odd(), d_scan.is_odd() ? "odd" : "even", "odd"});

    IntPoly n_direct = neighborhood_polynomial_direct(g, w);
    report.records.push_back(
        make_record("nbpoly-inclexcl", n_direct, neighborhood_polynomial_inclusion_exclusion(g, w)));
    report.records.push_back(
        make_record("nbpoly-bipartite", n_direct, neighborhood_polynomial_via_bipartite(g, w)));

    BipartiteCensus census = count_complete_bipartite_subgraphs(g, w);
    ParityCounts fast = count_parity_classes_fast(g, w);
    report.records.push_back({"census-parity",
                              census.a == fast.a && census.b == fast.b,
                              "(a=" + census.a.str() + ", b=" + census.b.str() + ")",
                              "(a=" + fast.a.str() + ", b=" + fast.b.str() + ")"});

    if (!options.skip_altsum && g.edge_count() <= edge_subset_cap())
        report.records.push_back(verify_alternating_sum(g, w));

    return report;
}

std::string report_to_text(const VerificationReport& report) {
    std::string out = "graph: n = " + std::to_string(report.n) + ", m = " + std::to_string(report.m) + "\n";
    int passed = 0;
    for (const auto& r : report.records) {
        out += (r.pass ? "PASS " : "FAIL ") + r.name + ": left = " + r.left +
               ", right = " + r.right + "\n";
        if (r.pass) ++passed;
    }
    out += std::to_string(passed) + " of " + std::to_string(report.records.size()) +
           " identities hold\n";
    return out;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = report.n;
    doc["m"] = report.m;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["name"] = r.name;
        rec["pass"] = r.pass;
        rec["left"] = r.left;
        rec["right"] = r.right;
        records.push_back(rec);
    }
    doc["identities"] = records;
    doc["all_pass"] = report.all_pass();
    return doc.dump();
}

}  // namespace graphpoly
