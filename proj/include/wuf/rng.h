#pragma once

#include <cmath>
#include <cstdint>

namespace wuf {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with a fixed counter-based stream derivation: the state for
// shot k under base seed s is the first four splitmix64 outputs of
// s XOR golden_gamma * (k + 1). Two shots never share a stream, and the
// mapping (seed, shot_index) -> stream is independent of which thread runs
// the shot, which is what makes parallel runs bit-identical to serial ones.
class Rng {
public:
    Rng() : Rng(0, 0) {}

    Rng(uint64_t seed, uint64_t shot_index) { reseed(seed, shot_index); }

    void reseed(uint64_t seed, uint64_t shot_index) {
        uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (shot_index + 1));
        for (auto& s : state_) s = splitmix64(z);
    }

    uint64_t next() {
        uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1).
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n >= 1 (Lemire multiply-shift; a hair of
    // bias at 2^-64 scale, irrelevant for sampling noise components).
    uint64_t below(uint64_t n) {
        return uint64_t((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t state_[4];
};

// Visits the indices of a length-`count` run of independent Bernoulli(q)
// locations that came up heads, in increasing order, via geometric skips.
// Cost is proportional to the number of heads rather than to `count`.
template <class F>
inline void for_each_flagged(uint64_t count, double q, Rng& rng, F&& fn) {
    if (q <= 0.0) return;
    if (q >= 1.0) {
        for (uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const double denom = std::log1p(-q);
    uint64_t pos = 0;
    while (true) {
        double u = rng.uniform();
        double skip = std::floor(std::log1p(-u) / denom);
        if (skip >= double(count)) return;  // also catches inf
        pos += uint64_t(skip);
        if (pos >= count) return;
        fn(pos);
        ++pos;
        if (pos >= count) return;
    }
}

}  // namespace wuf
