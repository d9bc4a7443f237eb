#include "mindom/hypergraph.hpp"

#include <bit>
#include <stdexcept>

namespace mindom {

bool Hypergraph::has_empty_edge() const {
    for (const auto& e : edges)
        if (e.empty()) return true;
    return false;
}

bool Hypergraph::is_sperner() const {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[i].is_subset_of(edges[j])) return false;
    return true;
}

Hypergraph sperner_reduce(const Hypergraph& h) {
    Hypergraph out(h.m);
    for (size_t i = 0; i < h.edges.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < h.edges.size() && keep; ++j) {
            if (i == j) continue;
            if (h.edges[j].is_subset_of(h.edges[i]) && h.edges[j] != h.edges[i]) keep = false;
            if (h.edges[j] == h.edges[i] && j < i) keep = false;  // duplicates collapse to the first
        }
        if (keep) out.edges.push_back(h.edges[i]);
    }
    return out;
}

bool is_transversal(const Hypergraph& h, const VertexSet& t) {
    for (const auto& e : h.edges)
        if (!t.intersects(e)) return false;
    return true;
}

bool is_minimal_transversal(const Hypergraph& h, const VertexSet& t) {
    if (!is_transversal(h, t)) return false;
    for (int x : t) {
        VertexSet smaller = t;
        smaller.erase(x);
        if (is_transversal(h, smaller)) return false;
    }
    return true;
}

std::vector<VertexSet> brute_force_transversals(const Hypergraph& h) {
    if (h.m > 24) throw std::invalid_argument("brute force transversal oracle limited to m <= 24");
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << h.m); ++mask) {
        VertexSet t(h.m);
        for (int v = 0; v < h.m; ++v)
            if ((mask >> v) & 1u) t.insert(v);
        if (is_minimal_transversal(h, t)) out.push_back(t);
    }
    return out;
}

namespace {

// Depth-first minimal hitting-set search. The invariant is that every chosen
// vertex keeps a critical edge (an edge it alone covers); branching on an
// uncovered edge removes its candidates first and returns each to the pool
// after its branch, so a transversal is reached through exactly one path:
// the one branching on the last processed element it contains per edge.
struct TransversalEngine {
    const Hypergraph& h;
    Sink& sink;
    EnumProbe* probe;
    std::vector<VertexSet> edges_at;  // edges containing v, as edge-index sets

    TransversalEngine(const Hypergraph& hh, Sink& s, EnumProbe* p) : h(hh), sink(s), probe(p) {
        const int k = static_cast<int>(h.edges.size());
        edges_at.assign(static_cast<size_t>(h.m), VertexSet(k));
        for (int e = 0; e < k; ++e)
            for (int v : h.edges[static_cast<size_t>(e)]) edges_at[static_cast<size_t>(v)].insert(e);
    }

    // crit[v] = edges covered by v alone, meaningful for chosen v.
    void rec(const VertexSet& chosen, VertexSet cand, const std::vector<VertexSet>& crit, const VertexSet& uncov) {
        if (sink.cancelled()) return;
        FrameGuard frame(probe);
        if (uncov.empty()) {
            sink.emit(chosen);
            return;
        }
        // Branch on the uncovered edge with the fewest candidates.
        int pick = -1, best = h.m + 1;
        for (int e : uncov) {
            int c = (h.edges[static_cast<size_t>(e)] & cand).count();
            if (c < best) {
                best = c;
                pick = e;
            }
        }
        VertexSet branch = h.edges[static_cast<size_t>(pick)] & cand;
        cand -= branch;
        for (int v : branch) {
            if (sink.cancelled()) return;
            const VertexSet& at_v = edges_at[static_cast<size_t>(v)];
            bool ok = true;
            for (int u : chosen)
                if ((crit[static_cast<size_t>(u)] - at_v).empty()) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::vector<VertexSet> next_crit = crit;
                for (int u : chosen) next_crit[static_cast<size_t>(u)] -= at_v;
                next_crit[static_cast<size_t>(v)] = uncov & at_v;
                VertexSet next_chosen = chosen;
                next_chosen.insert(v);
                rec(next_chosen, cand, next_crit, uncov - at_v);
            }
            cand.insert(v);
        }
    }
};

}  // namespace

void enumerate_transversals(const Hypergraph& h, Sink& sink, EnumProbe* probe) {
    if (!h.is_sperner()) throw std::logic_error("enumerate_transversals: input must be Sperner");
    if (static_cast<int>(h.edges.size()) > VertexSet::max_universe)
        throw std::invalid_argument("enumerate_transversals: too many edges");
    TransversalEngine engine(h, sink, probe);
    const int k = static_cast<int>(h.edges.size());
    std::vector<VertexSet> crit(static_cast<size_t>(h.m), VertexSet(k));
    engine.rec(VertexSet(h.m), VertexSet::full(h.m), crit, VertexSet::full(k));
}

std::optional<VertexSet> conformality_violation(const Hypergraph& h, int c) {
    if (h.m > 20) throw std::invalid_argument("conformality check limited to m <= 20");
    if (c < 1) throw std::invalid_argument("conformality_violation: c must be >= 1");
    const uint32_t total = uint32_t{1} << h.m;
    // covered[mask] = mask fits inside some edge.
    std::vector<bool> covered(total, false);
    for (const auto& e : h.edges) {
        uint32_t em = 0;
        for (int v : e) em |= uint32_t{1} << v;
        // Mark all submasks of em.
        uint32_t sub = em;
        for (;;) {
            covered[sub] = true;
            if (sub == 0) break;
            sub = (sub - 1) & em;
        }
    }
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (covered[mask]) continue;
        int sz = std::popcount(mask);
        if (sz <= c) continue;  // the set itself would be a <= c subset
        // Every subset of cardinality exactly c must be covered.
        std::vector<int> members;
        members.reserve(static_cast<size_t>(sz));
        for (int v = 0; v < h.m; ++v)
            if ((mask >> v) & 1u) members.push_back(v);
        std::vector<int> comb(static_cast<size_t>(c));
        for (int i = 0; i < c; ++i) comb[static_cast<size_t>(i)] = i;
        bool all_small_covered = true;
        for (;;) {
            uint32_t sm = 0;
            for (int i : comb) sm |= uint32_t{1} << members[static_cast<size_t>(i)];
            if (!covered[sm]) {
                all_small_covered = false;
                break;
            }
            int i = c - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] == sz - c + i) --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < c; ++j) comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
        }
        if (all_small_covered) {
            VertexSet witness(h.m);
            for (int v = 0; v < h.m; ++v)
                if ((mask >> v) & 1u) witness.insert(v);
            return witness;
        }
    }
    return std::nullopt;
}

bool conformality_at_most(const Hypergraph& h, int c) {
    return !conformality_violation(h, c).has_value();
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
    Hypergraph h(g.size());
    for (int v = 0; v < g.size(); ++v) h.edges.push_back(g.closed_neighbors(v));
    return h;
}

RedBlueHypergraph redblue_to_hypergraph(const Graph& g, const VertexSet& red, const VertexSet& blue) {
    if (red.intersects(blue)) throw std::logic_error("redblue_to_hypergraph: red and blue must be disjoint");
    RedBlueHypergraph out;
    out.to_vertex = red.to_vector();
    out.from_vertex.assign(static_cast<size_t>(g.size()), -1);
    for (size_t i = 0; i < out.to_vertex.size(); ++i)
        out.from_vertex[static_cast<size_t>(out.to_vertex[i])] = static_cast<int>(i);
    out.h = Hypergraph(static_cast<int>(out.to_vertex.size()));
    for (int b : blue) {
        VertexSet e(out.h.m);
        for (int v : g.neighbors(b) & red) e.insert(out.from_vertex[static_cast<size_t>(v)]);
        if (e.empty()) out.infeasible = true;
        out.h.edges.push_back(e);
    }
    return out;
}

RedBlueInstance hypergraph_to_redblue(const Hypergraph& h) {
    const int k = static_cast<int>(h.edges.size());
    const int n = h.m + k;
    RedBlueInstance inst{Graph(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < h.m; ++v) inst.red.insert(v);
    for (int e = 0; e < k; ++e) {
        inst.blue.insert(h.m + e);
        for (int v : h.edges[static_cast<size_t>(e)]) inst.graph.add_edge(v, h.m + e);
    }
    return inst;
}

MinFilterHypergraph min_filter_hypergraph(const Poset& p) {
    const int n = p.size();
    const VertexSet minimals = p.min_elements(VertexSet::full(n));
    const VertexSet ground_elems = VertexSet::full(n) - minimals;

    MinFilterHypergraph out;
    out.to_element = ground_elems.to_vector();
    out.from_element.assign(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < out.to_element.size(); ++i)
        out.from_element[static_cast<size_t>(out.to_element[i])] = static_cast<int>(i);

    Hypergraph raw(static_cast<int>(out.to_element.size()));
    for (int x : minimals) {
        VertexSet filter = p.up(x);
        filter.erase(x);
        if (filter.empty()) continue;  // an isolated minimal element has nothing above it
        VertexSet e(raw.m);
        for (int v : filter) e.insert(out.from_element[static_cast<size_t>(v)]);
        raw.edges.push_back(e);
    }
    out.h = sperner_reduce(raw);
    return out;
}

}  // namespace mindom
