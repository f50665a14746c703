#include "graphpoly/bipartite.hpp"

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "graphpoly/parallel.hpp"

namespace graphpoly {

BicliqueForm classify_complete_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t live = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) live |= 1ULL << v;
    if (live == 0) return {BicliqueKind::Empty, 0, 0};

    // Candidate split: B = N(v) for the lowest non-isolated v, A = rest.
    int v = __builtin_ctzll(live);
    std::uint64_t b = g.open_neighborhood(v).bits();
    std::uint64_t a = live & ~b;
    for (int u = 0; u < n; ++u) {
        if ((a >> u) & 1) {
            if (g.open_neighborhood(u).bits() != b) return {BicliqueKind::Other, 0, 0};
        } else if ((b >> u) & 1) {
            if (g.open_neighborhood(u).bits() != a) return {BicliqueKind::Other, 0, 0};
        }
    }
    int p = __builtin_popcountll(a);
    int q = __builtin_popcountll(b);
    if (p > q) std::swap(p, q);
    return {BicliqueKind::CompleteBipartite, p, q};
}

IntPoly h_polynomial(const Graph& g) {
    BicliqueForm form = classify_complete_bipartite(g);
    switch (form.kind) {
        case BicliqueKind::Empty:
            return IntPoly::constant(CheckedInt(1));
        case BicliqueKind::Other:
            return IntPoly::zero();
        case BicliqueKind::CompleteBipartite:
            break;
    }
    IntPoly h;
    h.add_term(form.p, CheckedInt(form.q % 2 == 0 ? -1 : 1));
    h.add_term(form.q, CheckedInt(form.p % 2 == 0 ? -1 : 1));
    return h;
}

namespace {

// Chunked scan over nonempty vertex subsets A in ascending mask order; fn
// gets (A, common neighborhood of A).  Tasks are contiguous mask ranges.
template <typename Fn>
void scan_common_neighborhoods(const Graph& g, unsigned workers, std::size_t ntasks, Fn&& fn) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.open_neighborhood(v).bits();
    std::uint64_t total = 1ULL << n;
    std::uint64_t full = g.vertices().bits();
    std::uint64_t chunk = (total + ntasks - 1) / ntasks;
    parallel_tasks(workers, ntasks, [&](std::size_t t) {
        std::uint64_t begin = chunk * t;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        for (std::uint64_t mask = begin < 1 ? 1 : begin; mask < end; ++mask) {
            std::uint64_t common = full;
            std::uint64_t rest = mask;
            while (rest) {
                common &= adj[static_cast<std::size_t>(__builtin_ctzll(rest))];
                rest &= rest - 1;
            }
            common &= ~mask;  // a common neighbor is never in A; kept as a guard
            fn(t, mask, common);
        }
    });
}

std::size_t task_count(unsigned workers, int n) {
    std::uint64_t total = 1ULL << n;
    std::size_t ntasks = static_cast<std::size_t>(workers) * 8;
    if (ntasks > total) ntasks = static_cast<std::size_t>(total);
    return ntasks == 0 ? 1 : ntasks;
}

}  // namespace

BipartiteCensus count_complete_bipartite_subgraphs(const Graph& g, unsigned workers) {
    int n = g.vertex_count();
    unsigned w = resolve_workers(workers);
    std::size_t ntasks = task_count(w, n);
    std::size_t side = static_cast<std::size_t>(n) + 1;

    // ordered[t][|A|*side + |B|] over ordered pairs; folded and halved below.
    std::vector<std::vector<CheckedInt>> ordered(
        ntasks, std::vector<CheckedInt>(side * side, CheckedInt(0)));
    scan_common_neighborhoods(g, w, ntasks, [&](std::size_t t, std::uint64_t a, std::uint64_t common) {
        if (!common) return;
        auto& local = ordered[t];
        std::size_t abits = static_cast<std::size_t>(__builtin_popcountll(a));
        for (std::uint64_t b = common; b; b = (b - 1) & common)
            local[abits * side + static_cast<std::size_t>(__builtin_popcountll(b))] += CheckedInt(1);
    });

    BipartiteCensus census;
    census.a = CheckedInt(0);
    census.b = CheckedInt(0);
    for (int p = 1; p <= n; ++p) {
        for (int q = p; q <= n; ++q) {
            CheckedInt folded(0);
            for (std::size_t t = 0; t < ntasks; ++t) {
                folded += ordered[t][static_cast<std::size_t>(p) * side + static_cast<std::size_t>(q)];
                if (p != q)
                    folded += ordered[t][static_cast<std::size_t>(q) * side + static_cast<std::size_t>(p)];
            }
            if (folded.is_zero()) continue;
            CheckedInt count = folded.half();
            census.counts[{p, q}] = count;
            if (p % 2 == 0 && q % 2 == 0) census.a += count;
            if (p % 2 == 1 && q % 2 == 1) census.b += count;
        }
    }
    return census;
}

ParityCounts count_parity_classes_fast(const Graph& g, unsigned workers) {
    unsigned w = resolve_workers(workers);
    std::size_t ntasks = task_count(w, g.vertex_count());

    // Ordered tallies by parity: for c >= 1 choices of common neighborhood,
    // 2^{c-1}-1 partners of even size and 2^{c-1} of odd size.
    std::vector<CheckedInt> even_ordered(ntasks, CheckedInt(0));
    std::vector<CheckedInt> odd_ordered(ntasks, CheckedInt(0));
    scan_common_neighborhoods(g, w, ntasks, [&](std::size_t t, std::uint64_t a, std::uint64_t common) {
        int c = __builtin_popcountll(common);
        if (c == 0) return;
        CheckedInt halfpow = CheckedInt::pow2(c - 1);
        if (__builtin_popcountll(a) % 2 == 0)
            even_ordered[t] += halfpow - CheckedInt(1);
        else
            odd_ordered[t] += halfpow;
    });

    CheckedInt even_total(0), odd_total(0);
    for (std::size_t t = 0; t < ntasks; ++t) {
        even_total += even_ordered[t];
        odd_total += odd_ordered[t];
    }
    return {even_total.half(), odd_total.half()};
}

CheckedInt dominating_count_via_bipartite(const Graph& g, unsigned workers) {
    int n = g.vertex_count();
    if (n == 0) return CheckedInt(1);  // the empty set dominates the null graph
    ParityCounts pc = count_parity_classes_fast(g.complement(), workers);
    CheckedInt two(2);
    return CheckedInt::pow2(n) - CheckedInt(1) + two * (pc.a - pc.b);
}

IntPoly neighborhood_polynomial_via_bipartite(const Graph& g, unsigned workers) {
    if (g.vertex_count() == 0) return IntPoly::zero();  // no vertex, no neighborhood
    BipartiteCensus census = count_complete_bipartite_subgraphs(g, workers);
    IntPoly np = IntPoly::constant(CheckedInt(1));
    for (const auto& [pq, count] : census.counts) {
        auto [p, q] = pq;
        np.add_term(p, q % 2 == 0 ? -count : count);
        np.add_term(q, p % 2 == 0 ? -count : count);
    }
    return np;
}

std::string census_to_json(const Graph& g, const BipartiteCensus& census) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [pq, count] : census.counts) {
        nlohmann::ordered_json entry;
        entry["p"] = pq.first;
        entry["q"] = pq.second;
        entry["count"] = count.str();
        entries.push_back(entry);
    }
    doc["counts"] = entries;
    doc["a"] = census.a.str();
    doc["b"] = census.b.str();
    return doc.dump();
}

}  // namespace graphpoly
