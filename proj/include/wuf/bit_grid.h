#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <vector>

namespace wuf {

// A d x d bit matrix on the torus, one row per lattice row, packed into
// 64-bit words. Supports the one shifted-XOR primitive the frame simulator
// needs: dst ^= src translated by (di, dj) with wraparound, |di|,|dj| <= 1.
class BitGrid {
public:
    BitGrid() = default;

    explicit BitGrid(int d)
        : d_(d), wpr_((d + 63) / 64), w_(size_t(d) * size_t(wpr_), 0) {
        int rem = d & 63;
        last_mask_ = rem == 0 ? ~uint64_t(0) : ((uint64_t(1) << rem) - 1);
    }

    int d() const { return d_; }

    void clear() { std::memset(w_.data(), 0, w_.size() * sizeof(uint64_t)); }

    bool get(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }

    void flip(int i, int j) { row(i)[j >> 6] ^= uint64_t(1) << (j & 63); }
    void set(int i, int j) { row(i)[j >> 6] |= uint64_t(1) << (j & 63); }

    uint64_t* row(int i) { return w_.data() + size_t(i) * wpr_; }
    const uint64_t* row(int i) const { return w_.data() + size_t(i) * wpr_; }

    void assign(const BitGrid& other) {
        assert(other.d_ == d_);
        std::memcpy(w_.data(), other.w_.data(), w_.size() * sizeof(uint64_t));
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    bool row_parity(int i) const {
        uint64_t acc = 0;
        const uint64_t* r = row(i);
        for (int k = 0; k < wpr_; ++k) acc ^= r[k];
        return std::popcount(acc) & 1;
    }

    bool col_parity(int j) const {
        int word = j >> 6, bit = j & 63;
        uint64_t acc = 0;
        for (int i = 0; i < d_; ++i) acc ^= row(i)[word] >> bit;
        return acc & 1;
    }

    // dst(i, j) ^= src((i + di) mod d, (j + dj) mod d)
    void xor_gather(const BitGrid& src, int di, int dj) {
        assert(src.d_ == d_ && di >= -1 && di <= 1 && dj >= -1 && dj <= 1);
        for (int i = 0; i < d_; ++i) {
            int si = i + di;
            if (si < 0) si += d_;
            else if (si >= d_) si -= d_;
            const uint64_t* s = src.row(si);
            uint64_t* t = row(i);
            if (dj == 0) {
                for (int k = 0; k < wpr_; ++k) t[k] ^= s[k];
            } else if (dj == 1) {
                xor_rot_right(t, s);
            } else {
                xor_rot_left(t, s);
            }
        }
    }

    template <class F>
    void for_each_set(F&& fn) const {
        for (int i = 0; i < d_; ++i) {
            const uint64_t* r = row(i);
            for (int k = 0; k < wpr_; ++k) {
                uint64_t x = r[k];
                while (x) {
                    int b = std::countr_zero(x);
                    fn(i, (k << 6) + b);
                    x &= x - 1;
                }
            }
        }
    }

private:
    // t ^= s rotated so that output bit j reads input bit (j+1) mod d.
    void xor_rot_right(uint64_t* t, const uint64_t* s) {
        uint64_t wrap = s[0] & 1;
        for (int k = 0; k < wpr_; ++k) {
            uint64_t hi = (k + 1 < wpr_) ? s[k + 1] : 0;
            t[k] ^= (s[k] >> 1) | (hi << 63);
        }
        int top = d_ - 1;
        t[top >> 6] ^= wrap << (top & 63);
    }

    // t ^= s rotated so that output bit j reads input bit (j-1) mod d.
    void xor_rot_left(uint64_t* t, const uint64_t* s) {
        int top = d_ - 1;
        uint64_t wrap = (s[top >> 6] >> (top & 63)) & 1;
        uint64_t carry = 0;
        for (int k = 0; k < wpr_; ++k) {
            uint64_t cur = s[k];
            uint64_t shifted = (cur << 1) | carry;
            if (k == wpr_ - 1) shifted &= last_mask_;
            t[k] ^= shifted;
            carry = cur >> 63;
        }
        t[0] ^= wrap;
    }

    int d_ = 0;
    int wpr_ = 0;
    uint64_t last_mask_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace wuf
