#include <benchmark/benchmark.h>

#include "graphpoly/bipartite.hpp"
#include "graphpoly/domination.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/identities.hpp"
#include "graphpoly/neighborhood.hpp"

using namespace graphpoly;

namespace {

Graph half_density(int n) { return random_gnp(n, 1, 2, 1); }

void BM_DominationPolynomial(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(domination_polynomial(g));
}
BENCHMARK(BM_DominationPolynomial)->Arg(12)->Arg(16)->Arg(20);

void BM_DominationPolynomialWorkers(benchmark::State& state) {
    Graph g = half_density(20);
    unsigned workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(domination_polynomial(g, workers));
}
BENCHMARK(BM_DominationPolynomialWorkers)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_NeighborhoodDirect(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial_direct(g));
}
BENCHMARK(BM_NeighborhoodDirect)->Arg(10)->Arg(14)->Arg(16);

void BM_NeighborhoodInclusionExclusion(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial_inclusion_exclusion(g));
}
BENCHMARK(BM_NeighborhoodInclusionExclusion)->Arg(10)->Arg(14)->Arg(16);

void BM_NeighborhoodViaBipartite(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(neighborhood_polynomial_via_bipartite(g));
}
BENCHMARK(BM_NeighborhoodViaBipartite)->Arg(10)->Arg(14)->Arg(16);

void BM_BipartiteCensus(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_complete_bipartite_subgraphs(g));
}
BENCHMARK(BM_BipartiteCensus)->Arg(12)->Arg(14)->Arg(16);

void BM_ParityClassesFast(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count_parity_classes_fast(g));
}
BENCHMARK(BM_ParityClassesFast)->Arg(12)->Arg(14)->Arg(16);

void BM_AlternatingEdgeSubsetSum(benchmark::State& state) {
    Graph g = half_density(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alternating_edge_subset_sum(g));
}
BENCHMARK(BM_AlternatingEdgeSubsetSum)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
