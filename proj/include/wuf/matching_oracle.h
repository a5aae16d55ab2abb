#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wuf/decoder_graph.h"
#include "wuf/uf_decoder.h"

namespace wuf {

// Single-source shortest paths over the decoder graph's current weights,
// with predecessor edges for path reconstruction.
struct DistanceTable {
    uint32_t source = 0;
    std::vector<double> distance;
    std::vector<uint32_t> pred_edge;  // edge leading into each vertex; ~0 at the source
};

DistanceTable shortest_paths(const DecoderGraph& graph, uint32_t source);

// Exact minimum-weight perfect matching by exhaustive pairing over
// shortest-path distances. Usable only for small excitation counts; the
// (k-1)!! enumeration is capped at 12 events (10395 pairings).
constexpr size_t kOracleEventCap = 12;

// Throws OddSyndromeError on odd |events| and TooManyEvents above the cap.
// Ties between pairings break toward the lexicographically first one. The
// returned correction is the symmetric difference of the matched pairs'
// reconstructed paths.
Correction exact_mwpm(const DecoderGraph& graph, std::span<const uint32_t> events);

// Total shortest-path weight of a given pairing of the events; pairing[i]
// holds the index (into events) matched with event i. Test helper for the
// optimality property.
double pairing_weight(const DecoderGraph& graph, std::span<const uint32_t> events,
                      std::span<const uint32_t> pairing);

}  // namespace wuf
