#pragma once

#include <cstdint>
#include <functional>

#include "mindom/vertex_set.hpp"

namespace mindom {

/// Streaming consumer receiving each enumerated solution exactly once.
/// The callback returns false to cancel the enumeration; callbacks occur
/// serially, and after cancellation no further callbacks happen.
class Sink {
public:
    using Callback = std::function<bool(const VertexSet&)>;

    explicit Sink(Callback cb) : cb_(std::move(cb)) {}

    /// Returns false once the enumeration should stop.
    bool emit(const VertexSet& s) {
        if (cancelled_) return false;
        ++count_;
        if (!cb_(s)) cancelled_ = true;
        return !cancelled_;
    }

    bool cancelled() const { return cancelled_; }
    uint64_t count() const { return count_; }

private:
    Callback cb_;
    bool cancelled_ = false;
    uint64_t count_ = 0;
};

/// Depth gauge for the pause/resume stacks of the enumerators: `peak` is the
/// largest number of simultaneously retained generator frames observed.
struct EnumProbe {
    int depth = 0;
    int peak = 0;
    void enter() {
        if (++depth > peak) peak = depth;
    }
    void leave() { --depth; }
};

class FrameGuard {
public:
    explicit FrameGuard(EnumProbe* p) : p_(p) {
        if (p_) p_->enter();
    }
    ~FrameGuard() {
        if (p_) p_->leave();
    }
    FrameGuard(const FrameGuard&) = delete;
    FrameGuard& operator=(const FrameGuard&) = delete;

private:
    EnumProbe* p_;
};

}  // namespace mindom
