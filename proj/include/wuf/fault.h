#pragma once

#include <cstdint>
#include <vector>

#include "wuf/lattice.h"
#include "wuf/schedule.h"

namespace wuf {

enum class FaultKind : uint8_t {
    data_idle,  // X/Y/Z after an idle step, probability p/3 per component
    anc_prep,   // wrong state prepared, probability 2p/3
    cnot,       // one of the 15 nontrivial two-qubit Paulis, probability p/15 each
    anc_meas,   // recorded outcome flipped, probability 2p/3
};

// One elementary fault component of one noisy operation. `plane` selects
// the qubit family at cell (i, j): for data_idle 0 = horizontal, 1 =
// vertical; for anc_prep/anc_meas and cnot 0 = X-check, 1 = Z-check.
// For cnot faults the component index c in [0, 15) encodes the pair
// (P_control, P_target) = ((c + 1) / 4, (c + 1) % 4) with 0=I 1=X 2=Y 3=Z.
struct FaultSite {
    uint16_t round = 0;
    uint8_t step = 1;  // 1 = prepare/idle, 2..5 = CNOT layers N,W,E,S, 6 = measure/idle
    FaultKind kind = FaultKind::data_idle;
    uint8_t plane = 0;
    uint16_t i = 0, j = 0;
    uint8_t component = 0;
    double probability = 0.0;
};

// Pauli on one qubit encoded 0=I 1=X 2=Y 3=Z.
inline bool pauli_has_x(int pauli) { return pauli == 1 || pauli == 2; }
inline bool pauli_has_z(int pauli) { return pauli == 2 || pauli == 3; }

inline int cnot_control_pauli(int component) { return (component + 1) >> 2; }
inline int cnot_target_pauli(int component) { return (component + 1) & 3; }

// Every elementary fault component of every noisy operation across the
// `rounds` noisy extraction rounds, in canonical order: per round, data
// idles (h then v), preparations (X-checks then Z-checks), the four CNOT
// layers (X-checks then Z-checks within each), data idles again, then
// measurement flips. The terminal perfect round contributes nothing.
std::vector<FaultSite> enumerate_fault_sites(const LatticeParams& params);

// Number of sites the enumeration yields, without materializing it.
uint64_t count_fault_sites(const LatticeParams& params);

void validate_site(const LatticeParams& params, const FaultSite& site);

}  // namespace wuf
