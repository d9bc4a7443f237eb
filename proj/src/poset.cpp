#include "mindom/poset.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mindom {

VertexSet Poset::up_set(const VertexSet& s) const {
    VertexSet out(n_);
    for (int v : s) out |= up_[static_cast<size_t>(v)];
    return out;
}

VertexSet Poset::down_set(const VertexSet& s) const {
    VertexSet out(n_);
    for (int v : s) out |= down_[static_cast<size_t>(v)];
    return out;
}

VertexSet Poset::min_elements(const VertexSet& s) const {
    VertexSet out(n_);
    for (int v : s) {
        VertexSet below = down_[static_cast<size_t>(v)] & s;
        below.erase(v);
        if (below.empty()) out.insert(v);
    }
    return out;
}

VertexSet Poset::max_elements(const VertexSet& s) const {
    VertexSet out(n_);
    for (int v : s) {
        VertexSet above = up_[static_cast<size_t>(v)] & s;
        above.erase(v);
        if (above.empty()) out.insert(v);
    }
    return out;
}

Poset Poset::dual() const {
    std::vector<std::vector<int>> rev = orders_;
    for (auto& ord : rev) std::reverse(ord.begin(), ord.end());
    return poset_from_orders(std::move(rev));
}

Poset poset_from_orders(std::vector<std::vector<int>> orders) {
    if (orders.empty()) throw std::invalid_argument("poset: at least one linear order is required");
    const int n = static_cast<int>(orders.front().size());
    if (n < 1) throw std::invalid_argument("poset: orders must be nonempty");
    const int d = static_cast<int>(orders.size());

    Poset p;
    p.n_ = n;
    p.d_ = d;
    p.rank_.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < d; ++i) {
        const auto& ord = orders[static_cast<size_t>(i)];
        if (static_cast<int>(ord.size()) != n)
            throw std::invalid_argument("poset: all orders must have the same length");
        auto& rk = p.rank_[static_cast<size_t>(i)];
        for (int pos = 0; pos < n; ++pos) {
            int v = ord[static_cast<size_t>(pos)];
            if (v < 0 || v >= n || rk[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("poset: order is not a permutation of 0..n-1");
            rk[static_cast<size_t>(v)] = pos;
        }
    }
    p.orders_ = std::move(orders);

    p.up_.assign(static_cast<size_t>(n), VertexSet(n));
    p.down_.assign(static_cast<size_t>(n), VertexSet(n));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            bool le = true;
            for (int i = 0; i < d && le; ++i)
                le = p.rank_[static_cast<size_t>(i)][static_cast<size_t>(x)] <=
                     p.rank_[static_cast<size_t>(i)][static_cast<size_t>(y)];
            if (le) {
                p.up_[static_cast<size_t>(x)].insert(y);
                p.down_[static_cast<size_t>(y)].insert(x);
            }
        }
    }
    return p;
}

Graph comparability_graph(const Poset& p) {
    const int n = p.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.comparable(u, v)) g.add_edge(u, v);
    return g;
}

Graph incomparability_graph(const Poset& p) {
    const int n = p.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!p.comparable(u, v)) g.add_edge(u, v);
    return g;
}

Poset standard_example(int t) {
    if (t < 1) throw std::invalid_argument("standard_example: t must be >= 1");
    // a_i = i, b_i = t + i (0-based i).
    if (t == 1) return poset_from_orders({{0, 1}, {1, 0}});

    std::vector<std::vector<int>> orders;
    orders.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        std::vector<int> ord;
        ord.reserve(static_cast<size_t>(2 * t));
        for (int j = 0; j < t; ++j)
            if (j != i) ord.push_back(j);
        ord.push_back(t + i);
        ord.push_back(i);
        for (int j = 0; j < t; ++j)
            if (j != i) ord.push_back(t + j);
        orders.push_back(std::move(ord));
    }
    return poset_from_orders(std::move(orders));
}

namespace {

// Unbiased bounded draw; mt19937_64's raw output sequence is pinned by the
// standard, so this stays reproducible across platforms.
uint64_t bounded_rand(std::mt19937_64& rng, uint64_t bound) {
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

Poset random_poset(int n, int d, uint64_t seed) {
    if (n < 1 || d < 1) throw std::invalid_argument("random_poset: n and d must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> orders;
    orders.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<int> ord(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) ord[static_cast<size_t>(v)] = v;
        for (int j = n - 1; j > 0; --j)
            std::swap(ord[static_cast<size_t>(j)],
                      ord[static_cast<size_t>(bounded_rand(rng, static_cast<uint64_t>(j) + 1))]);
        orders.push_back(std::move(ord));
    }
    return poset_from_orders(std::move(orders));
}

Poset chain_poset(int n) {
    if (n < 1) throw std::invalid_argument("chain_poset: n must be >= 1");
    std::vector<int> ord(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) ord[static_cast<size_t>(v)] = v;
    return poset_from_orders({std::move(ord)});
}

Poset antichain_poset(int n) {
    if (n < 1) throw std::invalid_argument("antichain_poset: n must be >= 1");
    std::vector<int> forward(static_cast<size_t>(n)), backward(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        forward[static_cast<size_t>(v)] = v;
        backward[static_cast<size_t>(v)] = n - 1 - v;
    }
    return poset_from_orders({std::move(forward), std::move(backward)});
}

bool is_antichain(const Poset& p, const VertexSet& s) {
    for (int v : s) {
        VertexSet rel = (p.up(v) | p.down(v)) & s;
        rel.erase(v);
        if (!rel.empty()) return false;
    }
    return true;
}

namespace {

int width_rec(const Poset& p, int from, const VertexSet& picked, int best) {
    const int n = p.size();
    int bound = picked.count() + (n - from);
    if (bound <= best) return best;
    int cur = std::max(best, picked.count());
    for (int v = from; v < n; ++v) {
        VertexSet rel = (p.up(v) | p.down(v)) & picked;
        if (!rel.empty()) continue;
        VertexSet next = picked;
        next.insert(v);
        cur = std::max(cur, width_rec(p, v + 1, next, cur));
    }
    return cur;
}

}  // namespace

int poset_width(const Poset& p) {
    return width_rec(p, 0, VertexSet(p.size()), 0);
}

namespace {

// Checks whether lower[i] / upper[i] can be paired as a_i / b_i of S_t after
// some relabeling: cross relations a_i < b_j exactly for i != j, both sides
// antichains, matched pairs incomparable.
bool matches_st(const Poset& p, const std::vector<int>& lower, const std::vector<int>& upper,
                std::vector<int>& pairing) {
    const int t = static_cast<int>(lower.size());
    pairing.assign(static_cast<size_t>(t), -1);  // pairing[i] = index in upper missed by lower[i]
    std::vector<int> missed_by(static_cast<size_t>(t), -1);
    for (int i = 0; i < t; ++i) {
        int misses = 0;
        for (int j = 0; j < t; ++j) {
            int a = lower[static_cast<size_t>(i)];
            int b = upper[static_cast<size_t>(j)];
            if (p.leq(b, a)) return false;  // no b may sit below an a
            if (p.leq(a, b)) continue;
            // incomparable: must be the unique matched partner
            ++misses;
            if (misses > 1) return false;
            pairing[static_cast<size_t>(i)] = j;
        }
        if (misses != 1) return false;
        int j = pairing[static_cast<size_t>(i)];
        if (missed_by[static_cast<size_t>(j)] != -1) return false;
        missed_by[static_cast<size_t>(j)] = i;
    }
    return true;
}

bool choose_upper(const Poset& p, const std::vector<int>& lower, const VertexSet& forbidden,
                  std::vector<int>& upper, int from, int t, std::vector<int>& pairing) {
    if (static_cast<int>(upper.size()) == t) return matches_st(p, lower, upper, pairing);
    for (int v = from; v < p.size(); ++v) {
        if (forbidden.contains(v)) continue;
        bool anti = true;
        for (int u : upper)
            if (p.comparable(u, v)) {
                anti = false;
                break;
            }
        if (!anti) continue;
        upper.push_back(v);
        if (choose_upper(p, lower, forbidden, upper, v + 1, t, pairing)) return true;
        upper.pop_back();
    }
    return false;
}

bool choose_lower(const Poset& p, std::vector<int>& lower, int from, int t,
                  std::vector<int>& upper, std::vector<int>& pairing) {
    if (static_cast<int>(lower.size()) == t) {
        VertexSet forbidden(p.size());
        for (int v : lower) forbidden.insert(v);
        upper.clear();
        return choose_upper(p, lower, forbidden, upper, 0, t, pairing);
    }
    for (int v = from; v < p.size(); ++v) {
        bool anti = true;
        for (int u : lower)
            if (p.comparable(u, v)) {
                anti = false;
                break;
            }
        if (!anti) continue;
        lower.push_back(v);
        if (choose_lower(p, lower, v + 1, t, upper, pairing)) return true;
        lower.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_st_suborder(const Poset& p, int t) {
    if (t < 1) throw std::invalid_argument("contains_st_suborder: t must be >= 1");
    if (2 * t > p.size()) return std::nullopt;
    std::vector<int> lower, upper, pairing;
    lower.reserve(static_cast<size_t>(t));
    if (!choose_lower(p, lower, 0, t, upper, pairing)) return std::nullopt;
    // Reorder the upper part so that witness[t + i] is the partner of
    // witness[i].
    std::vector<int> out = lower;
    out.resize(static_cast<size_t>(2 * t));
    for (int i = 0; i < t; ++i)
        out[static_cast<size_t>(t + i)] = upper[static_cast<size_t>(pairing[static_cast<size_t>(i)])];
    return out;
}

}  // namespace mindom
