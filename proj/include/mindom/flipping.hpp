#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "mindom/domination.hpp"
#include "mindom/graph.hpp"
#include "mindom/poset.hpp"
#include "mindom/sink.hpp"

namespace mindom {

/// Result of one flip: the parent set together with the exchanged pieces.
struct FlipOutcome {
    VertexSet d_star;  // the parent
    VertexSet x;       // X_uv, lex-smallest MIS over priv(D,u) minus N[v]
    VertexSet z;       // Z_uv, smallest-index redundancy removal
};

/// Parent of d with respect to flipping u and v. Requires d minimal
/// dominating, u in d with a neighbor in d, and v a private neighbor of u.
/// The parent has strictly fewer induced edges and v is isolated in it.
FlipOutcome flip_parent_detail(const Graph& g, const VertexSet& d, int u, int v);
VertexSet flip_parent(const Graph& g, const VertexSet& d, int u, int v);

/// True iff some pair (u, v) flips d onto d_star. Both sets are expected to
/// be minimal dominating.
bool is_child(const Graph& g, const VertexSet& d, const VertexSet& d_star);

/// Lexicographically smallest valid flip pair of d, or nothing when G[d] has
/// no edges (then d is a maximal independent set).
std::optional<std::pair<int, int>> canonical_flip_pair(const Graph& g, const VertexSet& d);

/// The exchange sets of the flip: blue vertices losing domination and the
/// red pool available to re-dominate them. When v <= u in p, the
/// construction runs on the dual
/// poset (flipped_upside_down is set); the sets themselves live in the
/// original element ids either way.
struct FlipSets {
    bool flipped_upside_down = false;
    VertexSet r1;  // self-private upper-neighbors of u in d_star; contains v
    VertexSet b;   // vertices losing domination when R1 is traded for u
    VertexSet r2;  // up-set of b minus N[R1]
    VertexSet r;   // (r1 - {v}) union r2
};

/// Requires: v in d_star, v isolated in G[d_star], u adjacent to v.
FlipSets compute_flip_sets(const Poset& p, const Graph& g, const VertexSet& d_star, int u, int v);

/// Emits a family of minimal dominating sets containing every child of
/// d_star with respect to flipping u and v: one greedy-reduced candidate per
/// minimal red dominating set of the restricted red-blue instance, obtained
/// through the hypergraph transversal route.
void children_candidates(const Poset& p, const Graph& g, const VertexSet& d_star, int u, int v, Sink& sink);

/// Per-class plug-in for the flipping engine. generate must emit, for a node
/// d_star and flip pair (u, v), a family of minimal dominating sets
/// containing every child of d_star with respect to (u, v). on_child may be
/// empty; the engine calls it whenever an emission is confirmed as a child,
/// as a hook for class-specific runtime checks.
struct ChildGenerator {
    std::function<void(const VertexSet& d_star, int u, int v, Sink& sink)> generate;
    std::function<void(const VertexSet& d_star, int u, int v, const VertexSet& child)> on_child;
};

/// The polynomial-space flipping method over an abstract child generator:
/// a depth-first search of the parent/child supergraph rooted at the maximal
/// independent sets, emitting every minimal dominating set of g exactly
/// once. Duplicate outputs are removed by re-simulating the emission stream,
/// so retained state is the pause stacks plus one counter, never the
/// solution family.
void enumerate_mds_via_child_generator(const Graph& g, const ChildGenerator& gen, Sink& sink,
                                       EnumProbe* probe = nullptr);

/// The flipping enumerator for comparability graphs: the engine above wired
/// to the red-blue child generator above.
void enumerate_mds_flipping(const Poset& p, Sink& sink, EnumProbe* probe = nullptr);

}  // namespace mindom
