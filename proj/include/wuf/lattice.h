#pragma once

#include <cstdint>

#include "wuf/errors.h"

namespace wuf {

// Which decoder graph a detector lives in. Primal detectors are plaquette
// (Z-check) comparisons and catch X-type data errors; dual detectors are
// vertex (X-check) comparisons and catch Z-type errors.
enum class GraphKind : uint8_t { primal = 0, dual = 1 };

inline const char* to_string(GraphKind k) {
    return k == GraphKind::primal ? "primal" : "dual";
}

struct LatticeParams {
    int d = 3;        // code distance; d x d torus with 2d^2 data qubits
    int rounds = 3;   // noisy extraction rounds (a perfect terminal round follows)
    double p = 0.0;   // physical error parameter

    void validate() const {
        if (d < 3) throw DomainError("LatticeParams: d must be >= 3");
        if (rounds < 1) throw DomainError("LatticeParams: rounds must be >= 1");
        if (!(p >= 0.0 && p < 0.5)) throw DomainError("LatticeParams: p must lie in [0, 0.5)");
    }
};

// Coordinates on the d x d torus. Row index i grows southward, column index
// j eastward. Data qubits sit on edges: h(i,j) joins vertex (i,j) to
// (i,j+1), v(i,j) joins vertex (i,j) to (i+1,j). X-check ancillas sit on
// vertices, Z-check ancillas on plaquettes; plaquette (i,j) has vertex (i,j)
// as its north-west corner.
struct Lattice {
    int d;

    explicit Lattice(int d_) : d(d_) {}

    int cells() const { return d * d; }
    int n_data() const { return 2 * d * d; }
    int n_qubits() const { return 4 * d * d; }

    int wrap(int x) const {
        x %= d;
        return x < 0 ? x + d : x;
    }

    int cell(int i, int j) const { return wrap(i) * d + wrap(j); }

    // Global qubit ids (used by the reference schedule/frame path).
    int qh(int i, int j) const { return cell(i, j); }
    int qv(int i, int j) const { return d * d + cell(i, j); }
    int qxa(int i, int j) const { return 2 * d * d + cell(i, j); }
    int qza(int i, int j) const { return 3 * d * d + cell(i, j); }

    // Space-time detector index within one graph: layer t in [0, rounds]
    // compares measurement round t against round t-1 (round -1 is the
    // deterministic reference, round `rounds` the perfect terminal round).
    uint32_t detector(int t, int i, int j) const {
        return uint32_t(t) * uint32_t(d * d) + uint32_t(cell(i, j));
    }
    static uint32_t n_detectors(int d, int rounds) {
        return uint32_t(rounds + 1) * uint32_t(d * d);
    }

    int det_t(uint32_t det) const { return int(det) / (d * d); }
    int det_i(uint32_t det) const { return (int(det) % (d * d)) / d; }
    int det_j(uint32_t det) const { return int(det) % d; }
};

}  // namespace wuf
