#pragma once

#include <vector>

#include "mindom/graph.hpp"
#include "mindom/poset.hpp"
#include "mindom/sink.hpp"

namespace mindom {

/// Red-blue instance: minimal red sets dominating all blue vertices are the
/// solutions. Red and blue must be disjoint but need not partition V.
struct RedBlueInstance {
    Graph graph;
    VertexSet red;
    VertexSet blue;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// True iff x is contained in N[d].
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& x);

/// priv(d, u) = { v : N[v] intersected with d equals {u} }; u must be in d.
VertexSet private_neighbors(const Graph& g, const VertexSet& d, int u);

bool is_irredundant(const Graph& g, const VertexSet& s);
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

/// Repeatedly removes the smallest-index vertex with no private neighbor
/// until the set is irredundant. d must dominate V; the result is a minimal
/// dominating subset of d.
VertexSet greedy_reduce(const Graph& g, VertexSet d);

/// Lexicographically smallest maximal independent set of G[x].
VertexSet lex_smallest_mis(const Graph& g, const VertexSet& x);

/// Emits every maximal independent set exactly once, in polynomial space
/// (reverse search over prefix-induced subgraphs).
void enumerate_mis(const Graph& g, Sink& sink, EnumProbe* probe = nullptr);

// Definition-checking oracles. Separate code path from the enumerators; they
// share only the Graph type. Exponential scans, guarded for small n.
std::vector<VertexSet> brute_force_mds(const Graph& g);
std::vector<VertexSet> brute_force_mis(const Graph& g);
std::vector<VertexSet> brute_force_red_blue(const Graph& g, const VertexSet& red, const VertexSet& blue);

/// |d| <= 2 * width(p), with the width computed by brute force. d is expected
/// to be a minimal dominating set of the comparability graph of p.
bool check_width_bound(const Poset& p, const VertexSet& d);

}  // namespace mindom
