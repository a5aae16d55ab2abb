#include "wuf/circuit_sim.h"

#include <cassert>

namespace wuf {

FrameSimulator::FrameSimulator(const LatticeParams& params)
    : params_(params),
      lat_(params.d),
      hx_(params.d), hz_(params.d), vx_(params.d), vz_(params.d),
      ax_x_(params.d), ax_z_(params.d), az_x_(params.d), az_z_(params.d),
      outx_(params.d), outz_(params.d), prevx_(params.d), prevz_(params.d) {
    params_.validate();
}

void FrameSimulator::apply_pauli(BitGrid& xplane, BitGrid& zplane, int i, int j, int pauli) {
    if (pauli_has_x(pauli)) xplane.flip(i, j);
    if (pauli_has_z(pauli)) zplane.flip(i, j);
}

void FrameSimulator::apply_site(const FaultSite& site) {
    const int i = site.i, j = site.j;
    switch (site.kind) {
        case FaultKind::data_idle: {
            int pauli = 1 + site.component;  // X, Y, Z
            if (site.plane == 0) apply_pauli(hx_, hz_, i, j, pauli);
            else apply_pauli(vx_, vz_, i, j, pauli);
            break;
        }
        case FaultKind::anc_prep:
            // |+> preparations fail to |->, i.e. a Z error; |0> to |1>, an X.
            if (site.plane == 0) ax_z_.flip(i, j);
            else az_x_.flip(i, j);
            break;
        case FaultKind::cnot: {
            CnotLayer layer = CnotLayer(site.step - 2);
            int pc = cnot_control_pauli(site.component);
            int pt = cnot_target_pauli(site.component);
            if (site.plane == 0) {
                PartnerOffset o = x_check_partner(layer);
                apply_pauli(ax_x_, ax_z_, i, j, pc);
                int di = lat_.wrap(i + o.di), dj = lat_.wrap(j + o.dj);
                if (o.plane == 0) apply_pauli(hx_, hz_, di, dj, pt);
                else apply_pauli(vx_, vz_, di, dj, pt);
            } else {
                PartnerOffset o = z_check_partner(layer);
                int di = lat_.wrap(i + o.di), dj = lat_.wrap(j + o.dj);
                if (o.plane == 0) apply_pauli(hx_, hz_, di, dj, pc);
                else apply_pauli(vx_, vz_, di, dj, pc);
                apply_pauli(az_x_, az_z_, i, j, pt);
            }
            break;
        }
        case FaultKind::anc_meas:
            if (site.plane == 0) outx_.flip(i, j);
            else outz_.flip(i, j);
            break;
    }
}

void FrameSimulator::apply_forced(std::span<const FaultSite> forced, int round, int step) {
    for (const FaultSite& s : forced)
        if (s.round == round && s.step == step) apply_site(s);
}

void FrameSimulator::cnot_layer(CnotLayer layer) {
    PartnerOffset xo = x_check_partner(layer);
    {
        // X-check ancilla controls its data partner: X flows anc -> data,
        // Z flows data -> anc.
        BitGrid& px = xo.plane == 0 ? hx_ : vx_;
        BitGrid& pz = xo.plane == 0 ? hz_ : vz_;
        px.xor_gather(ax_x_, -xo.di, -xo.dj);
        ax_z_.xor_gather(pz, xo.di, xo.dj);
    }
    PartnerOffset zo = z_check_partner(layer);
    {
        // Data controls the Z-check ancilla: X flows data -> anc,
        // Z flows anc -> data.
        BitGrid& px = zo.plane == 0 ? hx_ : vx_;
        BitGrid& pz = zo.plane == 0 ? hz_ : vz_;
        az_x_.xor_gather(px, zo.di, zo.dj);
        pz.xor_gather(az_z_, -zo.di, -zo.dj);
    }
}

void FrameSimulator::collect_events(int t, ShotRecord& out) {
    prevz_.xor_gather(outz_, 0, 0);  // prevz now holds outcome(t) ^ outcome(t-1)
    uint32_t base = lat_.detector(t, 0, 0);
    prevz_.for_each_set([&](int i, int j) {
        out.events_primal.push_back(base + uint32_t(i * lat_.d + j));
    });
    prevz_.assign(outz_);

    prevx_.xor_gather(outx_, 0, 0);
    prevx_.for_each_set([&](int i, int j) {
        out.events_dual.push_back(base + uint32_t(i * lat_.d + j));
    });
    prevx_.assign(outx_);
}

void FrameSimulator::run(const NoiseParams* noise, std::span<const FaultSite> forced,
                         ShotRecord& out) {
    const int d = params_.d;
    const uint64_t cells = uint64_t(d) * d;
    const double p = noise ? noise->p : 0.0;
    const double p_flip = 2.0 * p / 3.0;

    for (BitGrid* g : {&hx_, &hz_, &vx_, &vz_, &ax_x_, &ax_z_, &az_x_, &az_z_, &prevx_, &prevz_})
        g->clear();
    out.events_primal.clear();
    out.events_dual.clear();
    out.true_logical = {0, 0, 0, 0};

    auto idle_noise = [&]() {
        for (BitGrid* planes : {&hx_, &vx_}) {
            BitGrid& xp = *planes;
            BitGrid& zp = planes == &hx_ ? hz_ : vz_;
            for_each_flagged(cells, p, rng_, [&](uint64_t k) {
                if (counters_) ++counters_->idle;
                apply_pauli(xp, zp, int(k) / d, int(k) % d, 1 + int(rng_.below(3)));
            });
        }
    };

    const int total_rounds = params_.rounds + 1;  // terminal round is noiseless
    for (int r = 0; r < total_rounds; ++r) {
        const bool noisy = noise && r < params_.rounds;

        // Step 1: ancilla preparation; data qubits idle.
        ax_x_.clear(); ax_z_.clear(); az_x_.clear(); az_z_.clear();
        if (noisy) {
            idle_noise();
            for_each_flagged(cells, p_flip, rng_, [&](uint64_t k) {
                if (counters_) ++counters_->prep;
                ax_z_.flip(int(k) / d, int(k) % d);
            });
            for_each_flagged(cells, p_flip, rng_, [&](uint64_t k) {
                if (counters_) ++counters_->prep;
                az_x_.flip(int(k) / d, int(k) % d);
            });
        }
        if (!forced.empty()) apply_forced(forced, r, 1);

        // Steps 2-5: the four CNOT layers.
        for (int layer = 0; layer < 4; ++layer) {
            cnot_layer(CnotLayer(layer));
            if (noisy) {
                for (int plane = 0; plane < 2; ++plane) {
                    for_each_flagged(cells, p, rng_, [&](uint64_t k) {
                        if (counters_) ++counters_->cnot;
                        FaultSite s;
                        s.round = uint16_t(r);
                        s.step = uint8_t(2 + layer);
                        s.kind = FaultKind::cnot;
                        s.plane = uint8_t(plane);
                        s.i = uint16_t(k / d);
                        s.j = uint16_t(k % d);
                        s.component = uint8_t(rng_.below(15));
                        apply_site(s);
                    });
                }
            }
            if (!forced.empty()) apply_forced(forced, r, 2 + layer);
        }

        // Step 6: measurement; data qubits idle.
        outx_.assign(ax_z_);  // X-basis outcomes flip under Z errors
        outz_.assign(az_x_);  // Z-basis outcomes flip under X errors
        if (noisy) {
            idle_noise();
            for_each_flagged(cells, p_flip, rng_, [&](uint64_t k) {
                if (counters_) ++counters_->meas;
                outx_.flip(int(k) / d, int(k) % d);
            });
            for_each_flagged(cells, p_flip, rng_, [&](uint64_t k) {
                if (counters_) ++counters_->meas;
                outz_.flip(int(k) / d, int(k) % d);
            });
        }
        if (!forced.empty()) apply_forced(forced, r, 6);
        ax_x_.clear(); ax_z_.clear(); az_x_.clear(); az_z_.clear();

        collect_events(r, out);
    }

    // Crossing parities of the residual data error against the fixed
    // logical cuts: column 0 of vertical edges and row 0 of horizontal
    // edges for X errors, and the transposed pair for Z errors.
    out.true_logical[0] = vx_.col_parity(0);
    out.true_logical[1] = hx_.row_parity(0);
    out.true_logical[2] = hz_.col_parity(0);
    out.true_logical[3] = vz_.row_parity(0);
}

ShotRecord FrameSimulator::sample_shot(const NoiseParams& noise) {
    if (!(noise.p >= 0.0 && noise.p < 0.5))
        throw DomainError("sample_shot: p must lie in [0, 0.5)");
    rng_.reseed(noise.seed, noise.shot_index);
    ShotRecord out;
    run(&noise, {}, out);
    return out;
}

ShotRecord FrameSimulator::inject_fault(const FaultSite& site) {
    return inject_faults({&site, 1});
}

ShotRecord FrameSimulator::inject_faults(std::span<const FaultSite> sites) {
    for (const FaultSite& s : sites) validate_site(params_, s);
    ShotRecord out;
    run(nullptr, sites, out);
    return out;
}

ShotRecord sample_shot(const LatticeParams& params, const NoiseParams& noise) {
    FrameSimulator sim(params);
    return sim.sample_shot(noise);
}

ShotRecord inject_fault(const LatticeParams& params, const FaultSite& site) {
    FrameSimulator sim(params);
    return sim.inject_fault(site);
}

}  // namespace wuf
