#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "wuf/decoder_graph.h"
#include "wuf/disjoint_set.h"

namespace wuf {

// Edge set whose induced detector flips reproduce the detection events.
struct Correction {
    std::vector<uint32_t> edges;  // ascending edge ids
    uint8_t le_h = 0, le_v = 0;   // XOR of the member edges' crossing parities
    uint64_t growth_steps = 0;
    uint64_t peeled_edges = 0;
};

// Fully grown edges produced by syndrome validation.
struct Erasure {
    std::vector<uint32_t> edges;  // in growth order
    uint64_t growth_steps = 0;
};

// Optional introspection for tests and benchmarks.
struct DecodeTrace {
    struct Step {
        uint32_t root;
        double w_min;
        uint32_t boundary_kept;
        uint32_t merges;
    };
    std::vector<Step> steps;
    bool record_touches = false;
    std::vector<uint32_t> edge_touches;  // per-edge decrement counts
};

// Weighted union-find decoding: grow odd clusters by their minimum boundary
// weight until every cluster is even, then peel a minimum-weight spanning
// forest of the erasure. Growth arithmetic is integer (units of the common
// measure) in unweighted and truncated modes and plain double subtraction in
// weighted mode; every growth step fully consumes at least one boundary
// edge, so validation always terminates.
//
// One instance owns mutable scratch and serves one decode at a time; scratch
// is epoch-stamped so reset costs nothing. Independent instances may share
// the same immutable graph across threads.
class UfDecoder {
public:
    explicit UfDecoder(const DecoderGraph& graph);

    // events must be strictly ascending detector indices of even count.
    Correction decode(std::span<const uint32_t> events);

    Erasure syndrome_validation(std::span<const uint32_t> events);
    Correction peel(const Erasure& erasure, std::span<const uint32_t> events);

    const DecoderGraph& graph() const { return *g_; }
    void set_trace(DecodeTrace* trace) { trace_ = trace; }

private:
    static constexpr uint32_t kNil = ~uint32_t(0);

    uint32_t find(uint32_t v);
    void ensure_vertex(uint32_t v);
    bool edge_grown(uint32_t e) const;
    void init_edge(uint32_t e);
    void unite(uint32_t a, uint32_t b);

    const DecoderGraph* g_;
    bool integer_mode_;

    // Epoch-stamped per-detector state.
    uint32_t epoch_ = 0;
    std::vector<uint32_t> vstamp_, parent_, bhead_, btail_, bcount_;
    std::vector<uint32_t> csize_;
    std::vector<uint8_t> parity_;
    std::vector<uint32_t> evstamp_;

    // Epoch-stamped per-edge state.
    std::vector<uint32_t> estamp_;
    std::vector<int64_t> rem_int_;
    std::vector<double> rem_real_;

    // Boundary-list node pool; each vertex contributes its incident edges
    // exactly once, scans relink nodes in place.
    struct BNode {
        uint32_t edge;
        uint32_t next;
    };
    std::vector<BNode> pool_;

    // Active (odd) clusters keyed by (boundary length, root).
    std::set<std::pair<uint32_t, uint32_t>> active_;

    std::vector<uint32_t> grown_scratch_;

    // Peeling scratch (separate epoch). edge_done_ is |E|-sized but only
    // forest entries are ever set, and they are cleared again on exit.
    uint32_t peel_epoch_ = 0;
    std::vector<uint32_t> cvstamp_, cvid_;
    std::vector<uint32_t> touched_;
    std::vector<uint8_t> edge_done_;
    std::vector<uint32_t> eids_, forest_, deg_, off_, adj_, cursor_, queue_;
    std::vector<uint8_t> excited_;
    DisjointSet forest_dsu_;

    DecodeTrace* trace_ = nullptr;
};

// Detector flips induced by an edge set (each edge toggles its endpoints);
// returns ascending detector indices. Test helper for the validity contract.
std::vector<uint32_t> induced_flips(const DecoderGraph& g, std::span<const uint32_t> edges);

}  // namespace wuf
