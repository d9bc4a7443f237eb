#pragma once

#include <cstddef>
#include <vector>

#include "mindom/vertex_set.hpp"

namespace mindom {

/// Undirected simple graph on vertices 0..n-1; adjacency rows are bitsets.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        adj_.assign(static_cast<size_t>(n), VertexSet(n));
        adjc_.reserve(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) adjc_.push_back(VertexSet::singleton(n, v));
    }

    int size() const { return n_; }

    bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].contains(v); }

    void add_edge(int u, int v) {
        assert(u != v);
        adj_[static_cast<size_t>(u)].insert(v);
        adj_[static_cast<size_t>(v)].insert(u);
        adjc_[static_cast<size_t>(u)].insert(v);
        adjc_[static_cast<size_t>(v)].insert(u);
    }

    /// Open neighborhood N(v).
    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    /// Closed neighborhood N[v].
    const VertexSet& closed_neighbors(int v) const { return adjc_[static_cast<size_t>(v)]; }

    VertexSet vertices() const { return VertexSet::full(n_); }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!adjacent(u, v)) g.add_edge(u, v);
        return g;
    }

    size_t edge_count() const {
        size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += static_cast<size_t>(adj_[static_cast<size_t>(v)].count());
        return twice / 2;
    }

    /// Number of edges of the subgraph induced by s.
    size_t induced_edge_count(const VertexSet& s) const {
        size_t twice = 0;
        for (int v : s) twice += static_cast<size_t>((adj_[static_cast<size_t>(v)] & s).count());
        return twice / 2;
    }

    /// True when every edge of G[inner] is an edge of G[outer].
    bool induced_edges_subset(const VertexSet& inner, const VertexSet& outer) const {
        for (int v : inner) {
            VertexSet e = adj_[static_cast<size_t>(v)] & inner;
            if (e.empty()) continue;
            if (!outer.contains(v) || !e.is_subset_of(outer)) return false;
        }
        return true;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> adjc_;
};

}  // namespace mindom
