#include "graphpoly/graph.hpp"

#include <algorithm>
#include <atomic>

namespace graphpoly {

namespace {

std::atomic<int> g_vertex_capacity{kDefaultVertexCapacity};

void check_n(int n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (n > vertex_capacity())
        throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                            std::to_string(vertex_capacity()));
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

int vertex_capacity() { return g_vertex_capacity.load(); }

void set_vertex_capacity(int n) {
    if (n < 0 || n > kVertexCapacityCeiling)
        throw InputError("vertex capacity must be between 0 and " +
                         std::to_string(kVertexCapacityCeiling));
    g_vertex_capacity.store(n);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    std::uint64_t rest = bits_;
    while (rest) {
        out.push_back(__builtin_ctzll(rest));
        rest &= rest - 1;
    }
    return out;
}

Graph::Graph(int n) {
    check_n(n);
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                         std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    if (!has_edge(u, v)) {
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
        ++m_;
    }
}

Graph Graph::from_edge_list(int n, const EdgeSet& edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        g.check_vertex(e.u);
        g.check_vertex(e.v);
        g.add_edge_unchecked(e.u, e.v);
    }
    return g;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = __builtin_ctzll(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    std::uint64_t full = VertexSet::all(n_).bits();
    int m = 0;
    for (int v = 0; v < n_; ++v) {
        g.adj_[v] = full & ~adj_[v] & ~(1ULL << v);
        m += __builtin_popcountll(g.adj_[v]);
    }
    g.m_ = m / 2;
    return g;
}

Graph Graph::delete_edges(const EdgeSet& remove) const {
    Graph g = *this;
    for (const Edge& e : remove) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (!g.has_edge(e.u, e.v))
            throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                             ") not present");
        g.adj_[e.u] &= ~(1ULL << e.v);
        g.adj_[e.v] &= ~(1ULL << e.u);
        --g.m_;
    }
    return g;
}

EdgeSet Graph::edge_boundary(VertexSet w) const {
    EdgeSet out;
    for (int u = 0; u < n_; ++u) {
        if (!w.contains(u)) continue;
        std::uint64_t cross = adj_[u] & ~w.bits();
        while (cross) {
            int v = __builtin_ctzll(cross);
            cross &= cross - 1;
            out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    EdgeSet edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("a cycle needs at least 3 vertices");
    EdgeSet edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    EdgeSet edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int p, int q) {
    if (p < 1 || q < 1) throw InputError("both sides of a complete bipartite graph need a vertex");
    EdgeSet edges;
    for (int u = 0; u < p; ++u)
        for (int v = p; v < p + q; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(p + q, edges);
}

Graph random_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed) {
    if (p_den == 0) throw InputError("probability denominator must be nonzero");
    if (p_num > p_den) throw InputError("probability numerator exceeds denominator");
    std::uint64_t state = seed;
    EdgeSet edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t draw = splitmix64(state);
            if (draw % p_den < p_num) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace graphpoly
