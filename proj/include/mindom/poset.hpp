#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mindom/graph.hpp"
#include "mindom/vertex_set.hpp"

namespace mindom {

/// Partially ordered set on elements 0..n-1 given as the intersection of d
/// linear orders (a realizer): x <= y holds iff x precedes y in every order.
/// The comparability relation is materialized at construction, so leq() and
/// the filter/ideal rows are O(1) lookups.
class Poset {
public:
    Poset() = default;

    int size() const { return n_; }
    int dim() const { return d_; }

    /// The realizer; orders()[i] lists elements bottom-up in <=_i.
    const std::vector<std::vector<int>>& orders() const { return orders_; }

    /// Position of v in order i (0 = bottom).
    int rank(int order, int v) const { return rank_[static_cast<size_t>(order)][static_cast<size_t>(v)]; }

    bool leq(int x, int y) const { return up_[static_cast<size_t>(x)].contains(y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    /// Filter of v, including v itself.
    const VertexSet& up(int v) const { return up_[static_cast<size_t>(v)]; }
    /// Ideal of v, including v itself.
    const VertexSet& down(int v) const { return down_[static_cast<size_t>(v)]; }

    VertexSet up_set(const VertexSet& s) const;
    VertexSet down_set(const VertexSet& s) const;
    VertexSet min_elements(const VertexSet& s) const;
    VertexSet max_elements(const VertexSet& s) const;

    /// The upside-down poset (every order reversed).
    Poset dual() const;

    friend Poset poset_from_orders(std::vector<std::vector<int>> orders);

private:
    int n_ = 0;
    int d_ = 0;
    std::vector<std::vector<int>> orders_;
    std::vector<std::vector<int>> rank_;
    std::vector<VertexSet> up_;
    std::vector<VertexSet> down_;
};

/// Builds a poset from d permutations of 0..n-1 (throws std::invalid_argument
/// on a malformed realizer).
Poset poset_from_orders(std::vector<std::vector<int>> orders);

Graph comparability_graph(const Poset& p);
Graph incomparability_graph(const Poset& p);

/// Standard example S_t on 2t elements: the lower part a_1..a_t sits at
/// indices 0..t-1, the upper part b_1..b_t at t..2t-1, and a_i < b_j exactly
/// when i != j. For t >= 2 the realizer has exactly t orders; t = 1 needs two
/// (a single linear order cannot leave a_1 and b_1 incomparable).
Poset standard_example(int t);

/// d independently drawn uniform permutations under a deterministic seeded
/// generator; identical (n, d, seed) triples give identical posets.
Poset random_poset(int n, int d, uint64_t seed);

Poset chain_poset(int n);
Poset antichain_poset(int n);

bool is_antichain(const Poset& p, const VertexSet& s);

/// Maximum antichain size, by exhaustive search. Meant for small n.
int poset_width(const Poset& p);

/// Searches for 2t elements inducing S_t as a suborder; the witness lists the
/// lower part first, paired so that witness[i] is incomparable to
/// witness[t + i]. Exhaustive, meant for n <= ~12.
std::optional<std::vector<int>> contains_st_suborder(const Poset& p, int t);

}  // namespace mindom
