#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wuf/bit_grid.h"
#include "wuf/fault.h"
#include "wuf/lattice.h"
#include "wuf/rng.h"

namespace wuf {

struct NoiseParams {
    double p = 0.0;
    uint64_t seed = 0;
    uint64_t shot_index = 0;
};

// Detection events for one shot, as ascending detector indices per graph,
// plus the crossing parities of the residual data error after the terminal
// perfect round: {X-error horizontal, X-error vertical, Z-error horizontal,
// Z-error vertical}. The first two pair with primal-graph corrections, the
// last two with dual-graph corrections.
struct ShotRecord {
    std::vector<uint32_t> events_primal;
    std::vector<uint32_t> events_dual;
    std::array<uint8_t, 4> true_logical{0, 0, 0, 0};

    const std::vector<uint32_t>& events(GraphKind g) const {
        return g == GraphKind::primal ? events_primal : events_dual;
    }
    bool empty() const {
        return events_primal.empty() && events_dual.empty() &&
               !(true_logical[0] | true_logical[1] | true_logical[2] | true_logical[3]);
    }
};

// Counters for flagged noisy locations, filled when attached to a simulator.
struct FaultCounters {
    uint64_t idle = 0, prep = 0, cnot = 0, meas = 0;
};

// Pauli-frame simulator of the six-step extraction circuit on the torus.
// All per-qubit state lives in d x d bit planes; CNOT layers are applied as
// shifted plane XORs. One instance serves one shot at a time and may be
// reused; instances are independent, so shot-level parallelism uses one per
// worker.
class FrameSimulator {
public:
    explicit FrameSimulator(const LatticeParams& params);

    const LatticeParams& params() const { return params_; }

    // Samples every noisy location of `rounds` noisy rounds, runs the
    // perfect terminal round, and returns detection events plus the true
    // logical crossing parities. Deterministic in (seed, shot_index).
    ShotRecord sample_shot(const NoiseParams& noise);

    // Same pipeline with sampling disabled and the given fault components
    // applied with certainty.
    ShotRecord inject_fault(const FaultSite& site);
    ShotRecord inject_faults(std::span<const FaultSite> sites);

    void attach_counters(FaultCounters* counters) { counters_ = counters; }

    // Residual data-error planes after the last run (h = horizontal edges,
    // v = vertical edges). The graph builder reads these to attach logical
    // crossing parities to translated fault patterns.
    const BitGrid& residual_hx() const { return hx_; }
    const BitGrid& residual_hz() const { return hz_; }
    const BitGrid& residual_vx() const { return vx_; }
    const BitGrid& residual_vz() const { return vz_; }

private:
    void run(const NoiseParams* noise, std::span<const FaultSite> forced, ShotRecord& out);
    void apply_forced(std::span<const FaultSite> forced, int round, int step);
    void apply_site(const FaultSite& site);
    void apply_pauli(BitGrid& xplane, BitGrid& zplane, int i, int j, int pauli);
    void cnot_layer(CnotLayer layer);
    void collect_events(int t, ShotRecord& out);

    LatticeParams params_;
    Lattice lat_;
    Rng rng_;

    // Error planes: data horizontal/vertical, X-check and Z-check ancillas.
    BitGrid hx_, hz_, vx_, vz_, ax_x_, ax_z_, az_x_, az_z_;
    // Outcome-flip planes for the current round and the previous one.
    BitGrid outx_, outz_, prevx_, prevz_;

    FaultCounters* counters_ = nullptr;
};

// Convenience single-call forms matching the operation contracts.
ShotRecord sample_shot(const LatticeParams& params, const NoiseParams& noise);
ShotRecord inject_fault(const LatticeParams& params, const FaultSite& site);

}  // namespace wuf
