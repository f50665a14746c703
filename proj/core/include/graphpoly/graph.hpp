#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphpoly/errors.hpp"

namespace graphpoly {

// Enumeration budgets are 2^n (and 3^n for the census), so graphs are capped.
// The default keeps worst cases desk-scale; the ceiling is one 64-bit adjacency
// word minus the two graph6 header values.
constexpr int kVertexCapacityCeiling = 62;
constexpr int kDefaultVertexCapacity = 26;

int vertex_capacity();
void set_vertex_capacity(int n);

// Subset of {0, ..., 61} packed into a word.
class VertexSet {
public:
    VertexSet() = default;
    static VertexSet from_bits(std::uint64_t bits) { return VertexSet(bits); }
    static VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }
    static VertexSet single(int v) { return VertexSet(1ULL << v); }

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    bool contains(int v) const { return (bits_ >> v) & 1; }
    VertexSet with(int v) const { return VertexSet(bits_ | (1ULL << v)); }
    VertexSet without(int v) const { return VertexSet(bits_ & ~(1ULL << v)); }
    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    int min_vertex() const { return __builtin_ctzll(bits_); }  // precondition: nonempty

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

    std::vector<int> to_vector() const;

private:
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

// Undirected edge, stored with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw InputError("loops are not allowed");
    }

    friend bool operator==(const Edge& a, const Edge& b) = default;
    friend auto operator<=>(const Edge& a, const Edge& b) = default;
};

using EdgeSet = std::vector<Edge>;  // sorted, no duplicates

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edge_list(int n, const EdgeSet& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const { return u != v && (adj_[u] >> v) & 1; }
    VertexSet open_neighborhood(int v) const { return VertexSet::from_bits(adj_[v]); }
    VertexSet closed_neighborhood(int v) const {
        return VertexSet::from_bits(adj_[v] | (1ULL << v));
    }
    int degree(int v) const { return __builtin_popcountll(adj_[v]); }
    VertexSet vertices() const { return VertexSet::all(n_); }

    EdgeSet edges() const;
    Graph complement() const;
    Graph delete_edges(const EdgeSet& remove) const;

    // Edges with exactly one endpoint in w.
    EdgeSet edge_boundary(VertexSet w) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void add_edge_unchecked(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);

// G(n, p) with edge probability p_num/p_den.  Pair (u, v), u < v, in
// lexicographic order gets one 64-bit splitmix64 draw; the edge is present
// iff draw % p_den < p_num.  Fixed algorithm so seeds reproduce everywhere.
Graph random_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

}  // namespace graphpoly
