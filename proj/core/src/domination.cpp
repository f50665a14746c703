#include "graphpoly/domination.hpp"

#include <cstdint>
#include <vector>

#include "graphpoly/neighborhood.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {

bool is_dominating(const Graph& g, VertexSet w) {
    std::uint64_t covered = 0;
    std::uint64_t rest = w.bits();
    while (rest) {
        int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        covered |= g.closed_neighborhood(v).bits();
    }
    return covered == g.vertices().bits();
}

IntPoly domination_polynomial(const Graph& g, unsigned workers) {
    int n = g.vertex_count();
    std::uint64_t total = 1ULL << n;
    std::uint64_t full = g.vertices().bits();
    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.closed_neighborhood(v).bits();

    unsigned w = resolve_workers(workers);
    std::size_t ntasks = static_cast<std::size_t>(w) * 8;
    if (ntasks > total) ntasks = static_cast<std::size_t>(total);
    if (ntasks == 0) ntasks = 1;
    std::uint64_t chunk = (total + ntasks - 1) / ntasks;

    // Counts fit in 64 bits: d_k <= C(62, 31) < 2^60.
    std::vector<std::vector<std::uint64_t>> counts(
        ntasks, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    parallel_tasks(w, ntasks, [&](std::size_t t) {
        std::uint64_t begin = chunk * t;
        std::uint64_t end = begin + chunk < total ? begin + chunk : total;
        auto& local = counts[t];
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            std::uint64_t covered = 0;
            std::uint64_t rest = mask;
            while (rest) {
                covered |= closed[static_cast<std::size_t>(__builtin_ctzll(rest))];
                rest &= rest - 1;
            }
            if (covered == full) ++local[static_cast<std::size_t>(__builtin_popcountll(mask))];
        }
    });

    IntPoly d;
    for (std::size_t t = 0; t < ntasks; ++t)
        for (int k = 0; k <= n; ++k)
            d.add_term(k, CheckedInt(static_cast<long long>(counts[t][static_cast<std::size_t>(k)])));
    return d;
}

CheckedInt dominating_set_count(const Graph& g, unsigned workers) {
    return domination_polynomial(g, workers).eval(CheckedInt(1));
}

IntPoly domination_polynomial_via_complement(const Graph& g, unsigned workers) {
    return IntPoly::one_plus_x_power(g.vertex_count()) -
           neighborhood_polynomial_inclusion_exclusion(g.complement(), workers);
}

}  // namespace graphpoly
