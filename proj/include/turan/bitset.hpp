#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace turan {

// Vertex capacity. A word multiple so adjacency rows are fixed-size bitsets
// and row operations are word-parallel.
#ifndef TURAN_MAX_VERTICES
#define TURAN_MAX_VERTICES 512
#endif
inline constexpr int kMaxVertices = TURAN_MAX_VERTICES;
static_assert(kMaxVertices % 64 == 0, "capacity must be a multiple of 64");
inline constexpr int kWordCount = kMaxVertices / 64;

// Fixed-capacity set of vertex indices.
class VertexSet {
public:
    constexpr VertexSet() = default;

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    void clear() { w_.fill(0); }

    // Index of the lowest set bit, or -1 when empty.
    int find_first() const {
        for (int k = 0; k < kWordCount; ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return -1;
    }

    // Lowest set bit strictly above i, or -1.
    int find_next(int i) const {
        ++i;
        if (i >= kMaxVertices) return -1;
        int k = i >> 6;
        uint64_t w = w_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return k * 64 + std::countr_zero(w);
            if (++k == kWordCount) return -1;
            w = w_[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int k = 0; k < kWordCount; ++k) {
            uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    // Set {0, 1, ..., n-1}.
    static VertexSet range(int n) {
        VertexSet s;
        int k = 0;
        while (n >= 64) {
            s.w_[k++] = ~uint64_t{0};
            n -= 64;
        }
        if (n > 0) s.w_[k] = (uint64_t{1} << n) - 1;
        return s;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int k = 0; k < kWordCount; ++k) w_[k] &= o.w_[k];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (int k = 0; k < kWordCount; ++k) w_[k] |= o.w_[k];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int k = 0; k < kWordCount; ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool intersects(const VertexSet& o) const {
        for (int k = 0; k < kWordCount; ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int k = 0; k < kWordCount; ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
        for (int k = 0; k < kWordCount; ++k)
            if (a.w_[k] != b.w_[k]) return a.w_[k] <=> b.w_[k];
        return std::strong_ordering::equal;
    }

private:
    std::array<uint64_t, kWordCount> w_{};
};

}  // namespace turan
