#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wuf/fault.h"
#include "wuf/lattice.h"

namespace wuf {

enum class EdgeKind : uint8_t { spacelike = 0, timelike = 1, diagonal = 2 };
enum class WeightMode : uint8_t { weighted = 0, unweighted = 1, truncated = 2 };

const char* to_string(EdgeKind k);
const char* to_string(WeightMode m);
WeightMode weight_mode_from_string(const std::string& s);

// Log-odds edge weight ln((1 - p_e) / p_e). Throws DomainError outside (0, 1).
double edge_weight(double p_e);

struct EdgeRecord {
    uint32_t u = 0, v = 0;   // detector indices, u < v
    double p_sum = 0.0;      // summed probability of the grouped single faults
    double weight = 0.0;     // weight under the graph's current mode
    EdgeKind kind = EdgeKind::spacelike;
    uint8_t le_h = 0, le_v = 0;  // crossing parities of this edge's error chain
};

// Weighted space-time decoder graph for one syndrome type. Immutable once
// built (weight-mode changes rewrite the derived weight arrays only), so a
// single instance is safely shared across concurrent decoder instances.
struct DecoderGraph {
    GraphKind kind = GraphKind::primal;
    LatticeParams params;
    WeightMode mode = WeightMode::weighted;
    double epsilon = 0.0;  // grid of the truncation, when mode == truncated

    uint32_t n_detectors = 0;
    std::vector<EdgeRecord> edges;

    // Log-odds weights the mode derivations start from. Equal to
    // edge_weight(p_sum) after a build; replaced by assign_random_weights.
    std::vector<double> raw_weight;

    // Integer growth budgets in units of the common measure: all ones in
    // unweighted mode, round(w / epsilon) clamped to >= 1 in truncated mode,
    // empty in weighted mode (growth arithmetic stays in doubles there).
    std::vector<int64_t> int_weight;

    // CSR adjacency: incident edge ids of detector v are
    // adj_edges[adj_offsets[v] .. adj_offsets[v+1]).
    std::vector<uint32_t> adj_offsets, adj_edges;

    // Position of each edge in the global sort by (weight, edge id); the
    // peeling stage orders erasure edges by this rank.
    std::vector<uint32_t> rank_of_edge;

    // Growth-iteration guard for syndrome validation.
    uint64_t growth_guard = 0;

    std::span<const uint32_t> incident(uint32_t v) const {
        return {adj_edges.data() + adj_offsets[v], adj_edges.data() + adj_offsets[v + 1]};
    }
    uint32_t other_endpoint(uint32_t edge, uint32_t v) const {
        const EdgeRecord& e = edges[edge];
        return e.u == v ? e.v : e.u;
    }
};

// Recomputes mode weights, integer budgets, peel ranks and the growth guard
// from raw_weight. Throws DomainError if mode is truncated with eps <= 0.
void apply_weight_mode(DecoderGraph& g, WeightMode mode, double eps = 0.0);

// Recomputes rank_of_edge and growth_guard from the current weight columns;
// for use after filling them by hand (the graph loader does).
void rebuild_derived_weights(DecoderGraph& g);

// Truncates each weight to the grid round(w / eps) * eps, clamping weights
// that would round to zero up to eps, and switches the graph to truncated
// mode. Growth arithmetic then runs on the exact integers round(w / eps).
DecoderGraph quantize_weights(DecoderGraph g, double eps);

// Replaces every raw weight by ln((1 - w) / w) with w drawn uniformly from
// [w_lo, w_hi) under a seeded stream (edge order fixed by the build), then
// reapplies the current mode.
void assign_random_weights(DecoderGraph& g, double w_lo, double w_hi, uint64_t seed);

// Builds both decoder graphs by enumerating the single circuit faults of one
// base lattice cell and replicating them over all space-time translations.
std::pair<DecoderGraph, DecoderGraph> build_decoder_graphs(const LatticeParams& params,
                                                           WeightMode mode, double eps = 0.0);

// Reference builder: injects every enumerated fault site through the full
// noiseless pipeline. Quadratically slower; used for exhaustive soundness
// checks and to cross-validate the replicated builder.
std::pair<DecoderGraph, DecoderGraph> build_decoder_graphs_direct(const LatticeParams& params,
                                                                  WeightMode mode,
                                                                  double eps = 0.0);

// Graph file round trip (a single JSON document holding both graphs).
std::string graphs_to_json(const DecoderGraph& primal, const DecoderGraph& dual);
std::pair<DecoderGraph, DecoderGraph> graphs_from_json(const std::string& text);
void write_graphs(const std::string& path, const DecoderGraph& primal, const DecoderGraph& dual);
std::pair<DecoderGraph, DecoderGraph> read_graphs(const std::string& path);

}  // namespace wuf
