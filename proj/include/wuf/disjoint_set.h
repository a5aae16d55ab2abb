#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace wuf {

// Union by size with path compression. The decoder keeps its own stamped
// variant inline; this one serves peeling's spanning-forest pass and tests.
class DisjointSet {
public:
    DisjointSet() = default;
    explicit DisjointSet(uint32_t n) { reset(n); }

    void reset(uint32_t n) {
        parent_.resize(n);
        size_.assign(n, 1);
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    uint32_t find(uint32_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Merges the sets of a and b; returns the surviving root. Ties go to
    // the smaller root index so runs are reproducible.
    uint32_t unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (size_[a] < size_[b] || (size_[a] == size_[b] && b < a)) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return a;
    }

    uint32_t size_of(uint32_t v) { return size_[find(v)]; }

private:
    std::vector<uint32_t> parent_, size_;
};

}  // namespace wuf
