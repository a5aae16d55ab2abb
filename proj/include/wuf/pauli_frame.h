#pragma once

#include <cstdint>
#include <vector>

#include "wuf/schedule.h"

namespace wuf {

// Plain per-qubit error frame used by the reference stepper. The production
// simulator in circuit_sim.h tracks the same information in bit planes; this
// representation exists so tests can cross-check propagation one CNOT at a
// time.
struct PauliFrame {
    std::vector<uint8_t> x, z;

    explicit PauliFrame(int n_qubits) : x(n_qubits, 0), z(n_qubits, 0) {}

    int size() const { return int(x.size()); }
};

// Outcome-flip bits emitted by a measure step, one per ancilla, indexed by
// ancilla qubit id minus the first ancilla id (X-check ancillas first).
struct MeasureOutcomes {
    std::vector<uint8_t> flips;
};

// Noiseless propagation of one timestep. CNOTs copy X control->target and
// Z target->control. A measure step reads the basis-appropriate error bit
// of each ancilla (Z errors flip X-basis outcomes, X errors flip Z-basis
// outcomes) and then clears the ancilla bits; a prepare step clears them.
MeasureOutcomes step_frame(PauliFrame& frame, const Lattice& lat, const Timestep& step);

}  // namespace wuf
