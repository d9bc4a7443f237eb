#include "mindom/domination.hpp"

#include <stdexcept>

namespace mindom {

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(g.size());
    for (int v : s) out |= g.closed_neighbors(v);
    return out;
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& x) {
    return x.is_subset_of(closed_neighborhood(g, d));
}

VertexSet private_neighbors(const Graph& g, const VertexSet& d, int u) {
    if (!d.contains(u)) throw std::logic_error("private_neighbors: u must belong to d");
    VertexSet out(g.size());
    for (int v : g.closed_neighbors(u)) {
        VertexSet seen = g.closed_neighbors(v) & d;
        if (seen.count() == 1 && seen.contains(u)) out.insert(v);
    }
    return out;
}

bool is_irredundant(const Graph& g, const VertexSet& s) {
    for (int u : s)
        if (private_neighbors(g, s, u).empty()) return false;
    return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
    return dominates(g, d, g.vertices()) && is_irredundant(g, d);
}

VertexSet greedy_reduce(const Graph& g, VertexSet d) {
    if (!dominates(g, d, g.vertices())) throw std::logic_error("greedy_reduce: input must dominate V");
    for (;;) {
        int redundant = -1;
        for (int u : d) {
            if (private_neighbors(g, d, u).empty()) {
                redundant = u;
                break;
            }
        }
        if (redundant < 0) break;
        d.erase(redundant);
    }
    return d;
}

VertexSet lex_smallest_mis(const Graph& g, const VertexSet& x) {
    VertexSet chosen(g.size());
    VertexSet blocked(g.size());
    for (int v : x) {
        if (blocked.contains(v)) continue;
        chosen.insert(v);
        blocked.insert(v);
        blocked |= g.neighbors(v);
    }
    return chosen;
}

namespace {

// Reverse search over prefix-induced subgraphs: a maximal independent set of
// G[{0..k}] either keeps level k's vertex out (and must stay maximal) or
// contains it, in which case stripping the vertex and greedily completing
// within the prefix recovers the unique parent one level down.
struct MisEngine {
    const Graph& g;
    EnumProbe* probe;
    Sink& sink;

    // Lexicographically smallest MIS of G[{0..k}] containing s.
    VertexSet complete(VertexSet s, int k) const {
        for (int w = 0; w <= k; ++w) {
            if (s.contains(w)) continue;
            if (!g.neighbors(w).intersects(s)) s.insert(w);
        }
        return s;
    }

    bool maximal_in_prefix(const VertexSet& s, int k) const {
        for (int w = 0; w <= k; ++w) {
            if (s.contains(w)) continue;
            if (!g.neighbors(w).intersects(s)) return false;
        }
        return true;
    }

    void rec(int k, const VertexSet& mis) {
        if (sink.cancelled()) return;
        FrameGuard frame(probe);
        if (k == g.size() - 1) {
            sink.emit(mis);
            return;
        }
        const int v = k + 1;
        VertexSet hit = g.neighbors(v) & mis;
        if (hit.empty()) {
            VertexSet child = mis;
            child.insert(v);
            rec(k + 1, child);
            return;
        }
        rec(k + 1, mis);
        if (sink.cancelled()) return;
        VertexSet stripped = mis - g.neighbors(v);
        VertexSet child = stripped;
        child.insert(v);
        if (maximal_in_prefix(child, v) && complete(stripped, k) == mis) rec(k + 1, child);
    }
};

}  // namespace

void enumerate_mis(const Graph& g, Sink& sink, EnumProbe* probe) {
    if (g.size() == 0) {
        sink.emit(VertexSet(0));
        return;
    }
    MisEngine engine{g, probe, sink};
    engine.rec(0, VertexSet::singleton(g.size(), 0));
}

namespace {

constexpr int kBruteForceLimit = 24;

void require_brute_force_size(int n) {
    if (n > kBruteForceLimit) throw std::invalid_argument("brute force oracle limited to n <= 24");
}

VertexSet from_mask(uint32_t mask, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.insert(v);
    return s;
}

}  // namespace

std::vector<VertexSet> brute_force_mds(const Graph& g) {
    const int n = g.size();
    require_brute_force_size(n);
    std::vector<VertexSet> out;
    const VertexSet all = g.vertices();
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        VertexSet d = from_mask(mask, n);
        if (!dominates(g, d, all)) continue;
        bool minimal = true;
        for (int u : d) {
            VertexSet smaller = d;
            smaller.erase(u);
            if (dominates(g, smaller, all)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(d);
    }
    return out;
}

std::vector<VertexSet> brute_force_mis(const Graph& g) {
    const int n = g.size();
    require_brute_force_size(n);
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        VertexSet s = from_mask(mask, n);
        bool independent = true;
        for (int v : s)
            if ((g.neighbors(v) & s).count() > 0) {
                independent = false;
                break;
            }
        if (!independent) continue;
        bool maximal = true;
        for (int w = 0; w < n && maximal; ++w) {
            if (s.contains(w)) continue;
            if (!g.neighbors(w).intersects(s)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<VertexSet> brute_force_red_blue(const Graph& g, const VertexSet& red, const VertexSet& blue) {
    const int n = g.size();
    std::vector<int> reds = red.to_vector();
    const int r = static_cast<int>(reds.size());
    require_brute_force_size(r);
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < (uint32_t{1} << r); ++mask) {
        VertexSet d(n);
        for (int i = 0; i < r; ++i)
            if ((mask >> i) & 1u) d.insert(reds[static_cast<size_t>(i)]);
        if (!dominates(g, d, blue)) continue;
        bool minimal = true;
        for (int x : d) {
            VertexSet smaller = d;
            smaller.erase(x);
            if (dominates(g, smaller, blue)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(d);
    }
    return out;
}

bool check_width_bound(const Poset& p, const VertexSet& d) {
    return d.count() <= 2 * poset_width(p);
}

}  // namespace mindom
