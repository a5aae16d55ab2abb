#include "wuf/schedule.h"

#include <string>

#include "wuf/pauli_frame.h"

namespace wuf {

PartnerOffset x_check_partner(CnotLayer layer) {
    // X-check at vertex (i,j): N = v(i-1,j), W = h(i,j-1), E = h(i,j), S = v(i,j).
    switch (layer) {
        case CnotLayer::north: return {1, -1, 0};
        case CnotLayer::west: return {0, 0, -1};
        case CnotLayer::east: return {0, 0, 0};
        case CnotLayer::south: return {1, 0, 0};
    }
    throw ScheduleError("unknown CNOT layer");
}

PartnerOffset z_check_partner(CnotLayer layer) {
    // Z-check at plaquette (i,j): N = h(i,j), W = v(i,j), E = v(i,j+1), S = h(i+1,j).
    switch (layer) {
        case CnotLayer::north: return {0, 0, 0};
        case CnotLayer::west: return {1, 0, 0};
        case CnotLayer::east: return {1, 0, 1};
        case CnotLayer::south: return {0, 1, 0};
    }
    throw ScheduleError("unknown CNOT layer");
}

Schedule build_schedule(int d) {
    if (d < 3) throw ScheduleError("build_schedule: d must be >= 3");
    Lattice lat(d);
    Schedule sched;
    sched.d = d;
    sched.steps.push_back({StepKind::prepare, CnotLayer::north, {}});

    for (CnotLayer layer : {CnotLayer::north, CnotLayer::west, CnotLayer::east, CnotLayer::south}) {
        Timestep step{StepKind::cnot, layer, {}};
        step.cnots.reserve(size_t(2) * lat.cells());
        PartnerOffset xo = x_check_partner(layer);
        PartnerOffset zo = z_check_partner(layer);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                int xdata = xo.plane == 0 ? lat.qh(i + xo.di, j + xo.dj) : lat.qv(i + xo.di, j + xo.dj);
                step.cnots.emplace_back(lat.qxa(i, j), xdata);  // ancilla controls
            }
        }
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                int zdata = zo.plane == 0 ? lat.qh(i + zo.di, j + zo.dj) : lat.qv(i + zo.di, j + zo.dj);
                step.cnots.emplace_back(zdata, lat.qza(i, j));  // data controls
            }
        }
        // Every qubit at most once per layer.
        std::vector<uint8_t> used(lat.n_qubits(), 0);
        for (auto [c, t] : step.cnots) {
            if (used[c] || used[t])
                throw ScheduleError("build_schedule: qubit reused within layer " +
                                    std::to_string(int(layer)));
            used[c] = used[t] = 1;
        }
        sched.steps.push_back(std::move(step));
    }

    sched.steps.push_back({StepKind::measure, CnotLayer::north, {}});
    return sched;
}

MeasureOutcomes step_frame(PauliFrame& frame, const Lattice& lat, const Timestep& step) {
    MeasureOutcomes out;
    switch (step.kind) {
        case StepKind::prepare:
            for (int q = 2 * lat.cells(); q < lat.n_qubits(); ++q) frame.x[q] = frame.z[q] = 0;
            break;
        case StepKind::cnot:
            for (auto [c, t] : step.cnots) {
                frame.x[t] ^= frame.x[c];
                frame.z[c] ^= frame.z[t];
            }
            break;
        case StepKind::measure: {
            out.flips.resize(size_t(2) * lat.cells());
            for (int k = 0; k < lat.cells(); ++k) {
                int qx = 2 * lat.cells() + k;   // X basis: Z errors flip
                int qz = 3 * lat.cells() + k;   // Z basis: X errors flip
                out.flips[k] = frame.z[qx];
                out.flips[lat.cells() + k] = frame.x[qz];
                frame.x[qx] = frame.z[qx] = 0;
                frame.x[qz] = frame.z[qz] = 0;
            }
            break;
        }
    }
    return out;
}

}  // namespace wuf
