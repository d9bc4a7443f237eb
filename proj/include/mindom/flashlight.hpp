#pragma once

#include <optional>
#include <vector>

#include "mindom/graph.hpp"
#include "mindom/poset.hpp"
#include "mindom/sink.hpp"

namespace mindom {

/// Maximum element of s in order i (argmax of rank); s must be nonempty.
int line_max(const Poset& p, const VertexSet& s, int order);

/// UU(S): vertices outside s lying above the line-maximum of s in at least
/// one order; s must be nonempty.
VertexSet upward_set(const Poset& p, const VertexSet& s);

/// Three layers of d vertices each, extracted by the iterated per-order
/// maximum rule; defined for any s with |s| >= 3d.
struct Border {
    std::vector<int> first_layer;
    std::vector<int> second_layer;
    std::vector<int> third_layer;

    std::vector<int> concatenation() const {
        std::vector<int> t = first_layer;
        t.insert(t.end(), second_layer.begin(), second_layer.end());
        t.insert(t.end(), third_layer.begin(), third_layer.end());
        return t;
    }
};

Border border(const Poset& p, const VertexSet& s);

/// Decides whether the irredundant set irr extends upwards into a minimal
/// dominating set of the incomparability graph g, returning such an
/// extension as witness. Small sets are tested against tuples of private
/// neighbors of every member; sets of size >= 3d only against tuples over
/// the border.
std::optional<VertexSet> can_extend_upwards(const Poset& p, const Graph& g, const VertexSet& irr);

/// Parent in the flashlight tree: irr minus its order-1 maximum; irr must be
/// nonempty.
VertexSet parent_flashlight(const Poset& p, const VertexSet& irr);

/// Emits every minimal dominating set of the incomparability graph of p
/// exactly once, by depth-first search of the parent tree whose nodes are
/// upward-extendable irredundant sets. Space is bounded by the search path.
void enumerate_mds_incomparability(const Poset& p, Sink& sink, EnumProbe* probe = nullptr);

}  // namespace mindom
