#include "mindom/flashlight.hpp"

#include <cassert>
#include <stdexcept>

#include "mindom/domination.hpp"

namespace mindom {

int line_max(const Poset& p, const VertexSet& s, int order) {
    if (s.empty()) throw std::logic_error("line_max: set must be nonempty");
    if (order < 0 || order >= p.dim()) throw std::logic_error("line_max: order index out of range");
    int best = -1, best_rank = -1;
    for (int v : s) {
        int r = p.rank(order, v);
        if (r > best_rank) {
            best_rank = r;
            best = v;
        }
    }
    return best;
}

VertexSet upward_set(const Poset& p, const VertexSet& s) {
    if (s.empty()) throw std::logic_error("upward_set: set must be nonempty");
    const int n = p.size();
    VertexSet out(n);
    for (int i = 0; i < p.dim(); ++i) {
        int top_rank = p.rank(i, line_max(p, s, i));
        const auto& ord = p.orders()[static_cast<size_t>(i)];
        for (int pos = top_rank + 1; pos < n; ++pos) out.insert(ord[static_cast<size_t>(pos)]);
    }
    return out - s;
}

namespace {

std::vector<int> take_layer(const Poset& p, VertexSet& pool) {
    std::vector<int> layer;
    layer.reserve(static_cast<size_t>(p.dim()));
    for (int i = 0; i < p.dim(); ++i) {
        int a = line_max(p, pool, i);
        layer.push_back(a);
        pool.erase(a);
    }
    return layer;
}

}  // namespace

Border border(const Poset& p, const VertexSet& s) {
    if (s.count() < 3 * p.dim()) throw std::logic_error("border: set must have at least 3d elements");
    VertexSet pool = s;
    Border b;
    b.first_layer = take_layer(p, pool);
    b.second_layer = take_layer(p, pool);
    b.third_layer = take_layer(p, pool);
    return b;
}

namespace {

// Removes, smallest index first, every added vertex without a private
// neighbor; members of irr are never dropped. Their privates only grow while
// additions shrink, so the loop is safe.
VertexSet reduce_extension(const Graph& g, const VertexSet& irr, VertexSet extension) {
    VertexSet d = irr | extension;
    for (;;) {
        int redundant = -1;
        for (int x : d - irr) {
            if (private_neighbors(g, d, x).empty()) {
                redundant = x;
                break;
            }
        }
        if (redundant < 0) break;
        d.erase(redundant);
    }
    return d;
}

}  // namespace

std::optional<VertexSet> can_extend_upwards(const Poset& p, const Graph& g, const VertexSet& irr) {
    if (!is_irredundant(g, irr)) throw std::logic_error("can_extend_upwards: input must be irredundant");
    const int n = g.size();

    if (irr.empty()) {
        // Everything is an upward extension of the empty set.
        VertexSet d = reduce_extension(g, irr, VertexSet::full(n));
        assert(is_minimal_dominating(g, d));
        return d;
    }

    // Vertices the extension must newly dominate.
    VertexSet need = g.vertices() - closed_neighborhood(g, irr);
    VertexSet uu = upward_set(p, irr);

    // Tuple coordinates: private neighbors of every member for small sets,
    // of the 3d border vertices otherwise.
    std::vector<int> anchors;
    if (irr.count() < 3 * p.dim()) {
        anchors = irr.to_vector();
    } else {
        anchors = border(p, irr).concatenation();
    }
    std::vector<std::vector<int>> domains;
    domains.reserve(anchors.size());
    for (int t : anchors) domains.push_back(private_neighbors(g, irr, t).to_vector());

    const size_t k = domains.size();
    std::vector<size_t> odo(k, 0);
    // prefix[j] = N[w_1..w_j]; prefix[0] = empty.
    std::vector<VertexSet> prefix(k + 1, VertexSet(n));
    for (size_t j = 0; j < k; ++j)
        prefix[j + 1] = prefix[j] | g.closed_neighbors(domains[j][0]);

    for (;;) {
        VertexSet candidate = uu - prefix[k];
        bool dominating = true;
        for (int w : need) {
            if (!g.closed_neighbors(w).intersects(candidate)) {
                dominating = false;
                break;
            }
        }
        if (dominating) {
            VertexSet d = reduce_extension(g, irr, candidate);
            assert(is_minimal_dominating(g, d));
            return d;
        }
        // Advance the odometer, rebuilding the neighborhood prefixes of the
        // changed coordinates.
        size_t j = k;
        while (j > 0) {
            --j;
            if (++odo[j] < domains[j].size()) break;
            odo[j] = 0;
            if (j == 0) return std::nullopt;
        }
        assert(k > 0);
        for (size_t i = j; i < k; ++i)
            prefix[i + 1] = prefix[i] | g.closed_neighbors(domains[i][odo[i]]);
    }
}

VertexSet parent_flashlight(const Poset& p, const VertexSet& irr) {
    if (irr.empty()) throw std::logic_error("parent_flashlight: set must be nonempty");
    VertexSet out = irr;
    out.erase(line_max(p, irr, 0));
    return out;
}

namespace {

struct FlashlightEngine {
    const Poset& poset;
    const Graph& graph;
    Sink& sink;
    EnumProbe* probe;

    void visit(const VertexSet& node) {
        if (sink.cancelled()) return;
        FrameGuard frame(probe);
        if (is_minimal_dominating(graph, node)) {
            // Leaves of the parent tree are exactly the solutions.
            sink.emit(node);
            return;
        }
        VertexSet candidates = node.empty() ? graph.vertices() : upward_set(poset, node);
        for (int v : candidates) {
            if (sink.cancelled()) return;
            VertexSet child = node;
            child.insert(v);
            // Unique-parent filter: v must become the order-1 maximum.
            if (line_max(poset, child, 0) != v) continue;
            if (!is_irredundant(graph, child)) continue;
            if (!can_extend_upwards(poset, graph, child)) continue;
            visit(child);
        }
    }
};

}  // namespace

void enumerate_mds_incomparability(const Poset& p, Sink& sink, EnumProbe* probe) {
    const Graph g = incomparability_graph(p);
    FlashlightEngine engine{p, g, sink, probe};
    engine.visit(VertexSet(p.size()));
}

}  // namespace mindom
