#include "doctest.h"
#include "mindom/domination.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace mindom;

namespace {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle4() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, uint64_t seed, int percent = 50) {
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
    return g;
}

std::vector<VertexSet> sorted(std::vector<VertexSet> fam) {
    std::sort(fam.begin(), fam.end());
    return fam;
}

VertexSet vs(int n, std::initializer_list<int> verts) {
    VertexSet s(n);
    for (int v : verts) s.insert(v);
    return s;
}

}  // namespace

TEST_CASE("closed neighborhoods") {
    Graph edgeless(4);
    CHECK(closed_neighborhood(edgeless, vs(4, {2})) == vs(4, {2}));
    CHECK(closed_neighborhood(complete_graph(4), vs(4, {0})) == VertexSet::full(4));
    CHECK(closed_neighborhood(cycle4(), vs(4, {0})) == vs(4, {0, 1, 3}));
}

TEST_CASE("domination predicate") {
    Graph g = random_graph(6, 1);
    CHECK(dominates(g, g.vertices(), g.vertices()));
    Graph edgeless(2);
    CHECK_FALSE(dominates(edgeless, vs(2, {0}), vs(2, {1})));
    CHECK(dominates(cycle4(), vs(4, {0, 2}), VertexSet::full(4)));
}

TEST_CASE("private neighbors") {
    Graph edgeless(3);
    CHECK(private_neighbors(edgeless, vs(3, {1}), 1) == vs(3, {1}));  // self-private
    Graph k4 = complete_graph(4);
    CHECK(private_neighbors(k4, vs(4, {0, 1}), 0).empty());
    Graph p4 = path_graph(4);
    CHECK(private_neighbors(p4, vs(4, {0, 3}), 0) == vs(4, {0, 1}));
    CHECK_THROWS_AS(private_neighbors(p4, vs(4, {0}), 2), std::logic_error);
}

TEST_CASE("private neighbors definitional cross-check") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(7, 40 + seed);
        VertexSet d = vs(7, {0, 2, 5});
        for (int u : d) {
            VertexSet got = private_neighbors(g, d, u);
            for (int v = 0; v < 7; ++v) {
                VertexSet meet = g.closed_neighbors(v) & d;
                bool expect = meet == vs(7, {u});
                CHECK(got.contains(v) == expect);
            }
        }
    }
}

TEST_CASE("irredundance and minimal domination") {
    Graph edgeless(3);
    CHECK(is_minimal_dominating(edgeless, VertexSet::full(3)));
    Graph k3 = complete_graph(3);
    CHECK_FALSE(is_irredundant(k3, VertexSet::full(3)));
    Graph c4 = cycle4();
    CHECK(is_minimal_dominating(c4, vs(4, {0, 1})));
    CHECK(private_neighbors(c4, vs(4, {0, 1}), 0) == vs(4, {3}));
    CHECK(private_neighbors(c4, vs(4, {0, 1}), 1) == vs(4, {2}));
}

TEST_CASE("greedy reduction") {
    Graph c4 = cycle4();
    CHECK(greedy_reduce(c4, vs(4, {0, 1})) == vs(4, {0, 1}));  // already minimal

    // K_3 from the full vertex set: 0, then 1, lose their privates first.
    Graph k3 = complete_graph(3);
    VertexSet reduced = greedy_reduce(k3, VertexSet::full(3));
    CHECK(reduced == vs(3, {2}));
    auto family = brute_force_mds(k3);
    CHECK(std::find(family.begin(), family.end(), reduced) != family.end());

    Graph p3 = path_graph(3);
    VertexSet r = greedy_reduce(p3, VertexSet::full(3));
    CHECK(r == vs(3, {1}));
    CHECK(r.is_subset_of(VertexSet::full(3)));
    auto fam3 = brute_force_mds(p3);
    CHECK(std::find(fam3.begin(), fam3.end(), r) != fam3.end());

    CHECK_THROWS_AS(greedy_reduce(path_graph(4), vs(4, {0})), std::logic_error);
}

TEST_CASE("greedy reduction is idempotent and shrinking") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, 70 + seed);
        VertexSet d = g.vertices();
        VertexSet r = greedy_reduce(g, d);
        CHECK(r.is_subset_of(d));
        CHECK(is_minimal_dominating(g, r));
        CHECK(greedy_reduce(g, r) == r);
    }
}

TEST_CASE("lexicographically smallest maximal independent set") {
    Graph c4 = cycle4();
    CHECK(lex_smallest_mis(c4, VertexSet(4)).empty());
    Graph edgeless(4);
    CHECK(lex_smallest_mis(edgeless, vs(4, {1, 3})) == vs(4, {1, 3}));
    VertexSet got = lex_smallest_mis(c4, VertexSet::full(4));
    CHECK(got == vs(4, {0, 2}));
    auto mis = brute_force_mis(c4);
    CHECK(std::find(mis.begin(), mis.end(), got) != mis.end());
}

TEST_CASE("maximal independent set enumeration") {
    auto collect = [](const Graph& g) {
        std::vector<VertexSet> out;
        Sink sink([&](const VertexSet& s) {
            out.push_back(s);
            return true;
        });
        enumerate_mis(g, sink);
        return out;
    };

    CHECK(collect(complete_graph(5)).size() == 5);
    auto edgeless = collect(Graph(4));
    REQUIRE(edgeless.size() == 1);
    CHECK(edgeless.front() == VertexSet::full(4));
    CHECK(sorted(collect(cycle4())) == sorted({vs(4, {0, 2}), vs(4, {1, 3})}));

    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(1 + static_cast<int>(seed % 8), 200 + seed, 30 + static_cast<int>(seed % 50));
        auto got = sorted(collect(g));
        auto expect = sorted(brute_force_mis(g));
        CHECK(got == expect);
        // No duplicates.
        CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    }
}

TEST_CASE("mis enumeration honors cancellation") {
    Graph g = complete_graph(6);
    int seen = 0;
    Sink sink([&](const VertexSet&) { return ++seen < 3; });
    enumerate_mis(g, sink);
    CHECK(seen == 3);
    CHECK(sink.cancelled());
}

TEST_CASE("brute force families") {
    auto k3 = brute_force_mds(complete_graph(3));
    CHECK(sorted(k3) == sorted({vs(3, {0}), vs(3, {1}), vs(3, {2})}));

    Graph g = random_graph(5, 9);
    auto rb = brute_force_red_blue(g, vs(5, {0, 1}), VertexSet(5));
    REQUIRE(rb.size() == 1);
    CHECK(rb.front().empty());
}

TEST_CASE("minimal dominating sets of the S_2 comparability graph") {
    Poset p = standard_example(2);
    Graph comp = comparability_graph(p);
    auto fam = sorted(brute_force_mds(comp));
    // Two disjoint edges: one endpoint per edge, four choices.
    CHECK(fam == sorted({vs(4, {0, 1}), vs(4, {0, 2}), vs(4, {3, 1}), vs(4, {3, 2})}));
}

TEST_CASE("every maximal independent set is a minimal dominating set") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(7, 300 + seed);
        auto mds = brute_force_mds(g);
        for (const auto& s : brute_force_mis(g))
            CHECK(std::find(mds.begin(), mds.end(), s) != mds.end());
    }
}

TEST_CASE("width bound for comparability graphs") {
    Poset chain = chain_poset(6);
    for (const auto& d : brute_force_mds(comparability_graph(chain))) CHECK(check_width_bound(chain, d));
    Poset anti = antichain_poset(5);
    CHECK(check_width_bound(anti, VertexSet::full(5)));
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Poset p = random_poset(8, 2, 40 + seed);
        for (const auto& d : brute_force_mds(comparability_graph(p))) CHECK(check_width_bound(p, d));
    }
}
