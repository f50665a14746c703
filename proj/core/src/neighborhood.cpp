#include "graphpoly/neighborhood.hpp"

#include <cstdint>
#include <vector>

#include "graphpoly/parallel.hpp"

namespace graphpoly {

bool in_neighborhood_complex(const Graph& g, VertexSet x) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (x.subset_of(g.open_neighborhood(v))) return true;
    }
    return false;
}

IntPoly neighborhood_polynomial_direct(const Graph& g, unsigned workers) {
    int n = g.vertex_count();
    std::uint64_t total = 1ULL << n;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.open_neighborhood(v).bits();

    unsigned w = resolve_workers(workers);
    std::size_t ntasks = static_cast<std::size_t>(w) * 8;
    if (ntasks > total) ntasks = static_cast<std::size_t>(total);
    if (ntasks == 0) ntasks = 1;
    std::uint64_t chunk = (total + ntasks - 1) / ntasks;

    std::vector<std::vector<std::uint64_t>> counts(
        ntasks, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    parallel_tasks(w, ntasks, [&](std::size_t t) {
        std::uint64_t begin = chunk * t;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        auto& local = counts[t];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            for (std::size_t v = 0; v < adj.size(); ++v) {
                if ((mask & ~adj[v]) == 0) {
                    ++local[static_cast<std::size_t>(__builtin_popcountll(mask))];
                    break;
                }
            }
        }
    });

    IntPoly np;
    for (std::size_t t = 0; t < ntasks; ++t)
        for (int k = 0; k <= n; ++k)
            np.add_term(k, CheckedInt(static_cast<long long>(counts[t][static_cast<std::size_t>(k)])));
    return np;
}

namespace {

// Adds (-1)^{|W|+1} to weight[|intersection|] for every W that extends the
// current choice with vertices >= from.  parity is |W| mod 2 so far.
void accumulate_signed_intersections(const std::vector<std::uint64_t>& adj, int from,
                                     std::uint64_t inter, int parity,
                                     std::vector<long long>& weight) {
    weight[static_cast<std::size_t>(__builtin_popcountll(inter))] += parity ? 1 : -1;
    for (int v = from; v < static_cast<int>(adj.size()); ++v)
        accumulate_signed_intersections(adj, v + 1, inter & adj[static_cast<std::size_t>(v)],
                                        parity ^ 1, weight);
}

}  // namespace

IntPoly neighborhood_polynomial_inclusion_exclusion(const Graph& g, unsigned workers) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.open_neighborhood(v).bits();

    // Task v covers the sets whose minimum vertex is v.  Signed tallies fit in
    // 64 bits (at most 2^{n-1} <= 2^61 sets per size).
    unsigned w = resolve_workers(workers);
    std::vector<std::vector<long long>> weights(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
    parallel_tasks(w, static_cast<std::size_t>(n), [&](std::size_t v) {
        accumulate_signed_intersections(adj, static_cast<int>(v) + 1, adj[v], 1, weights[v]);
    });

    std::vector<CheckedInt> weight(static_cast<std::size_t>(n) + 1, CheckedInt(0));
    for (std::size_t v = 0; v < weights.size(); ++v)
        for (std::size_t c = 0; c < weight.size(); ++c) weight[c] += CheckedInt(weights[v][c]);

    // Pascal row for (1+x)^c, updated in place as c grows.
    IntPoly np;
    std::vector<CheckedInt> row(static_cast<std::size_t>(n) + 1, CheckedInt(0));
    row[0] = CheckedInt(1);
    for (int c = 0; c <= n; ++c) {
        if (c > 0)
            for (int j = c; j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
        if (!weight[static_cast<std::size_t>(c)].is_zero())
            for (int k = 0; k <= c; ++k)
                np.add_term(k, weight[static_cast<std::size_t>(c)] * row[static_cast<std::size_t>(k)]);
    }
    return np;
}

}  // namespace graphpoly
