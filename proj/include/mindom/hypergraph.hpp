#pragma once

#include <optional>
#include <vector>

#include "mindom/domination.hpp"
#include "mindom/graph.hpp"
#include "mindom/poset.hpp"
#include "mindom/sink.hpp"

namespace mindom {

/// Hypergraph over ground set 0..m-1.
struct Hypergraph {
    int m = 0;
    std::vector<VertexSet> edges;

    Hypergraph() = default;
    explicit Hypergraph(int ground) : m(ground) {}

    void add_edge(const VertexSet& e) { edges.push_back(e); }
    bool has_empty_edge() const;
    /// No edge contains another (distinct) edge.
    bool is_sperner() const;
};

/// Keeps only inclusion-minimal edges and collapses duplicates, preserving
/// first-occurrence order. The minimal-transversal family is unchanged.
Hypergraph sperner_reduce(const Hypergraph& h);

bool is_transversal(const Hypergraph& h, const VertexSet& t);
bool is_minimal_transversal(const Hypergraph& h, const VertexSet& t);

/// All minimal transversals by scanning every subset of the ground set.
std::vector<VertexSet> brute_force_transversals(const Hypergraph& h);

/// Emits each minimal transversal exactly once via depth-first minimal
/// hitting-set search with per-vertex criticality bookkeeping. Requires a
/// Sperner input (run sperner_reduce first); polynomial space.
void enumerate_transversals(const Hypergraph& h, Sink& sink, EnumProbe* probe = nullptr);

/// Conformality c: any X whose subsets of size <= c all fit inside edges must
/// itself fit inside an edge. Exhaustive over X, meant for small m.
bool conformality_at_most(const Hypergraph& h, int c);
/// A violating X when conformality c fails, otherwise nothing.
std::optional<VertexSet> conformality_violation(const Hypergraph& h, int c);

/// Closed-neighborhood hypergraph: one edge N[x] per vertex x.
Hypergraph neighborhood_hypergraph(const Graph& g);

/// Red-blue instance recast as a hypergraph over ground set R. Ground index i
/// stands for vertex to_vertex[i]; from_vertex maps back (-1 off the ground
/// set). infeasible flags a blue vertex with no red neighbor, in which case
/// the transversal family is empty.
struct RedBlueHypergraph {
    Hypergraph h;
    std::vector<int> to_vertex;
    std::vector<int> from_vertex;
    bool infeasible = false;

    VertexSet to_vertices(const VertexSet& ground_subset, int n) const {
        VertexSet out(n);
        for (int i : ground_subset) out.insert(to_vertex[static_cast<size_t>(i)]);
        return out;
    }
};

RedBlueHypergraph redblue_to_hypergraph(const Graph& g, const VertexSet& red, const VertexSet& blue);

/// Bipartite red-blue instance with one blue vertex per edge; its minimal red
/// dominating sets are exactly the minimal transversals of h.
RedBlueInstance hypergraph_to_redblue(const Hypergraph& h);

/// Hypergraph of minimal filters: ground set P - Min(P), edges the inclusion-minimal
/// sets (filter of x) - {x} over minimal elements x. Ground index i stands
/// for element to_element[i].
struct MinFilterHypergraph {
    Hypergraph h;
    std::vector<int> to_element;
    std::vector<int> from_element;
};

MinFilterHypergraph min_filter_hypergraph(const Poset& p);

}  // namespace mindom
