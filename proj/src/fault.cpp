#include "wuf/fault.h"

#include <string>

namespace wuf {

namespace {

void push_idle(std::vector<FaultSite>& out, int round, int step, double p, int d) {
    for (int plane = 0; plane < 2; ++plane)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int c = 0; c < 3; ++c)
                    out.push_back({uint16_t(round), uint8_t(step), FaultKind::data_idle,
                                   uint8_t(plane), uint16_t(i), uint16_t(j), uint8_t(c), p / 3.0});
}

void push_flips(std::vector<FaultSite>& out, int round, int step, FaultKind kind, double p, int d) {
    for (int plane = 0; plane < 2; ++plane)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                out.push_back({uint16_t(round), uint8_t(step), kind, uint8_t(plane),
                               uint16_t(i), uint16_t(j), 0, 2.0 * p / 3.0});
}

}  // namespace

std::vector<FaultSite> enumerate_fault_sites(const LatticeParams& params) {
    params.validate();
    const int d = params.d;
    const double p = params.p;
    std::vector<FaultSite> out;
    out.reserve(count_fault_sites(params));
    for (int r = 0; r < params.rounds; ++r) {
        push_idle(out, r, 1, p, d);
        push_flips(out, r, 1, FaultKind::anc_prep, p, d);
        for (int layer = 0; layer < 4; ++layer)
            for (int plane = 0; plane < 2; ++plane)
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j)
                        for (int c = 0; c < 15; ++c)
                            out.push_back({uint16_t(r), uint8_t(2 + layer), FaultKind::cnot,
                                           uint8_t(plane), uint16_t(i), uint16_t(j), uint8_t(c),
                                           p / 15.0});
        push_idle(out, r, 6, p, d);
        push_flips(out, r, 6, FaultKind::anc_meas, p, d);
    }
    return out;
}

uint64_t count_fault_sites(const LatticeParams& params) {
    uint64_t cells = uint64_t(params.d) * params.d;
    // per round: 2*2d^2 idle qubit-steps x3 comps, 2d^2 preps, 4*2d^2 CNOTs x15, 2d^2 meas
    uint64_t per_round = 2 * (2 * cells) * 3 + 2 * cells + 4 * (2 * cells) * 15 + 2 * cells;
    return per_round * uint64_t(params.rounds);
}

void validate_site(const LatticeParams& params, const FaultSite& site) {
    auto fail = [&](const char* why) { throw InvalidSite(std::string("fault site: ") + why); };
    if (site.round >= params.rounds) fail("round beyond the noisy rounds");
    if (site.i >= params.d || site.j >= params.d) fail("cell outside the lattice");
    if (site.plane > 1) fail("plane out of range");
    switch (site.kind) {
        case FaultKind::data_idle:
            if (site.step != 1 && site.step != 6) fail("idle must sit at step 1 or 6");
            if (site.component > 2) fail("idle component out of range");
            break;
        case FaultKind::anc_prep:
            if (site.step != 1) fail("preparation happens at step 1");
            if (site.component != 0) fail("preparation has a single component");
            break;
        case FaultKind::cnot:
            if (site.step < 2 || site.step > 5) fail("CNOT steps are 2..5");
            if (site.component > 14) fail("CNOT component out of range");
            break;
        case FaultKind::anc_meas:
            if (site.step != 6) fail("measurement happens at step 6");
            if (site.component != 0) fail("measurement has a single component");
            break;
    }
}

}  // namespace wuf
