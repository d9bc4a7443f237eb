#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mindom {

/// Dense set of vertex indices over a fixed universe 0..n-1 (n <= 128).
/// Iteration is always in ascending index order; every lexicographic greedy
/// rule in the library leans on that determinism.
class VertexSet {
public:
    static constexpr int max_universe = 128;

    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe) {
        if (universe < 0 || universe > max_universe)
            throw std::invalid_argument("VertexSet: universe size must be in [0, 128]");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w * 64 < universe; ++w) {
            int bits = universe - w * 64 >= 64 ? 64 : universe - w * 64;
            s.w_[w] = bits == 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
        }
        return s;
    }

    static VertexSet singleton(int universe, int v) {
        VertexSet s(universe);
        s.insert(v);
        return s;
    }

    int universe() const { return n_; }
    bool empty() const { return (w_[0] | w_[1]) == 0; }
    int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    VertexSet& insert(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63);
        return *this;
    }

    VertexSet& erase(int v) {
        assert(v >= 0 && v < n_);
        w_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63));
        return *this;
    }

    void clear() { w_[0] = w_[1] = 0; }

    /// Smallest member, or -1 when empty.
    int first() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    int next_after(int v) const {
        assert(v >= 0);
        if (v + 1 >= n_) return -1;
        int start = v + 1;
        uint64_t lo = w_[static_cast<size_t>(start) >> 6] >> (start & 63);
        if (lo) return start + std::countr_zero(lo);
        if (start < 64 && w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        w_[0] &= ~o.w_[0];
        w_[1] &= ~o.w_[1];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const { return full(n_) - *this; }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        return (w_[0] & o.w_[0]) || (w_[1] & o.w_[1]);
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    /// Total order on the underlying bit pattern; used only as a canonical
    /// sort key for solution families.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
        return a.w_[0] < b.w_[0];
    }

    class iterator {
    public:
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = v_ < 0 ? -1 : s_->next_after(v_);
            return *this;
        }
        friend bool operator!=(const iterator& a, const iterator& b) { return a.v_ != b.v_; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };

    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    uint64_t word(int i) const { return w_[static_cast<size_t>(i)]; }

private:
    std::array<uint64_t, 2> w_{};
    int n_ = 0;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(s.universe());
        for (int i = 0; i < 2; ++i) {
            uint64_t x = s.word(i) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            h ^= x ^ (x >> 31);
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace mindom
