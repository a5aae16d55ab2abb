#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wuf/lattice.h"

namespace wuf {

// The four CNOT layers, in circuit order. Each ancilla interacts with the
// data qubit to its north, west, east and south, in that order.
enum class CnotLayer : uint8_t { north = 0, west = 1, east = 2, south = 3 };

enum class StepKind : uint8_t { prepare, cnot, measure };

struct Timestep {
    StepKind kind;
    CnotLayer layer = CnotLayer::north;              // valid when kind == cnot
    std::vector<std::pair<int, int>> cnots;          // (control, target) qubit ids
};

// One extraction round: prepare, four CNOT layers, measure.
struct Schedule {
    int d = 0;
    std::vector<Timestep> steps;  // size 6
};

// Data-qubit partner of a check ancilla at cell (i, j) for a given layer,
// as (plane, di, dj) where plane 0 = horizontal edges, 1 = vertical edges
// and the partner cell is ((i + di) mod d, (j + dj) mod d).
struct PartnerOffset {
    int plane;
    int di;
    int dj;
};

PartnerOffset x_check_partner(CnotLayer layer);
PartnerOffset z_check_partner(CnotLayer layer);

// Builds the six-step schedule with explicit CNOT pairs. X-check ancillas
// are controls, Z-check ancillas targets. Throws ScheduleError if any qubit
// would participate twice in one layer.
Schedule build_schedule(int d);

}  // namespace wuf
