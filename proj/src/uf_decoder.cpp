#include "wuf/uf_decoder.h"

#include <algorithm>
#include <cassert>

namespace wuf {

UfDecoder::UfDecoder(const DecoderGraph& graph)
    : g_(&graph), integer_mode_(graph.mode != WeightMode::weighted) {
    const uint32_t n = g_->n_detectors;
    const size_t m = g_->edges.size();
    vstamp_.assign(n, 0);
    parent_.resize(n);
    bhead_.resize(n);
    btail_.resize(n);
    bcount_.resize(n);
    csize_.resize(n);
    parity_.resize(n);
    evstamp_.assign(n, 0);
    estamp_.assign(m, 0);
    if (integer_mode_) rem_int_.resize(m);
    else rem_real_.resize(m);
    cvstamp_.assign(n, 0);
    cvid_.resize(n);
    edge_done_.assign(m, 0);
}

void UfDecoder::ensure_vertex(uint32_t v) {
    if (vstamp_[v] == epoch_) return;
    vstamp_[v] = epoch_;
    parent_[v] = v;
    csize_[v] = 1;
    parity_[v] = evstamp_[v] == epoch_ ? 1 : 0;
    // A fresh vertex's boundary is its full incidence list; stale entries
    // are purged lazily during scans.
    uint32_t head = kNil, tail = kNil, count = 0;
    for (uint32_t e : g_->incident(v)) {
        uint32_t node = uint32_t(pool_.size());
        pool_.push_back({e, kNil});
        if (tail == kNil) head = node;
        else pool_[tail].next = node;
        tail = node;
        ++count;
    }
    bhead_[v] = head;
    btail_[v] = tail;
    bcount_[v] = count;
}

uint32_t UfDecoder::find(uint32_t v) {
    ensure_vertex(v);
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool UfDecoder::edge_grown(uint32_t e) const {
    if (estamp_[e] != epoch_) return false;
    return integer_mode_ ? rem_int_[e] == 0 : rem_real_[e] <= 0.0;
}

void UfDecoder::init_edge(uint32_t e) {
    if (estamp_[e] == epoch_) return;
    estamp_[e] = epoch_;
    if (integer_mode_) rem_int_[e] = g_->int_weight[e];
    else rem_real_[e] = g_->edges[e].weight;
}

void UfDecoder::unite(uint32_t a, uint32_t b) {
    // Keep the larger cluster's root; ties go to the smaller index.
    if (csize_[a] < csize_[b] || (csize_[a] == csize_[b] && b < a)) std::swap(a, b);
    active_.erase({bcount_[a], a});
    active_.erase({bcount_[b], b});
    parent_[b] = a;
    csize_[a] += csize_[b];
    parity_[a] ^= parity_[b];
    if (bhead_[b] != kNil) {
        if (bhead_[a] == kNil) bhead_[a] = bhead_[b];
        else pool_[btail_[a]].next = bhead_[b];
        btail_[a] = btail_[b];
    }
    bcount_[a] += bcount_[b];
    if (parity_[a]) active_.insert({bcount_[a], a});
}

Erasure UfDecoder::syndrome_validation(std::span<const uint32_t> events) {
    if (events.size() % 2 != 0)
        throw OddSyndromeError("syndrome_validation: odd number of detection events");

    ++epoch_;
    pool_.clear();
    active_.clear();
    Erasure erasure;
    if (trace_ && trace_->record_touches) trace_->edge_touches.assign(g_->edges.size(), 0);
    if (events.empty()) return erasure;

    for (uint32_t v : events) {
        if (v >= g_->n_detectors) throw DomainError("event detector out of range");
        evstamp_[v] = epoch_;
    }
    for (uint32_t v : events) {
        ensure_vertex(v);
        active_.insert({bcount_[v], v});
    }

    uint64_t iterations = 0;
    while (!active_.empty()) {
        if (++iterations > g_->growth_guard)
            throw NonTerminationGuard("cluster growth exceeded its iteration budget");
        auto [old_count, r] = *active_.begin();
        active_.erase(active_.begin());

        // First pass: purge stale entries, relink survivors in place, find
        // the smallest remaining boundary weight.
        uint32_t head = kNil, tail = kNil, kept = 0;
        int64_t wmin_int = 0;
        double wmin_real = 0.0;
        bool have_min = false;
        for (uint32_t node = bhead_[r]; node != kNil;) {
            uint32_t next = pool_[node].next;
            uint32_t e = pool_[node].edge;
            bool keep = false;
            if (!edge_grown(e)) {
                uint32_t ru = find(g_->edges[e].u);
                uint32_t rv = find(g_->edges[e].v);
                keep = ru != rv;  // internal edges are simply removed
            }
            if (keep) {
                init_edge(e);
                if (integer_mode_) {
                    if (!have_min || rem_int_[e] < wmin_int) wmin_int = rem_int_[e];
                } else {
                    if (!have_min || rem_real_[e] < wmin_real) wmin_real = rem_real_[e];
                }
                have_min = true;
                if (tail == kNil) head = node;
                else pool_[tail].next = node;
                tail = node;
                ++kept;
            }
            node = next;
        }
        if (tail != kNil) pool_[tail].next = kNil;
        bhead_[r] = head;
        btail_[r] = tail;
        bcount_[r] = kept;
        if (!have_min)
            throw NonTerminationGuard("odd cluster has an empty boundary");

        // Second pass: grow the cluster radius by w_min on every boundary
        // edge; edges reaching zero become erasure and trigger merges.
        grown_scratch_.clear();
        for (uint32_t node = bhead_[r]; node != kNil; node = pool_[node].next) {
            uint32_t e = pool_[node].edge;
            if (trace_ && trace_->record_touches) ++trace_->edge_touches[e];
            bool grown;
            if (integer_mode_) {
                rem_int_[e] -= wmin_int;
                grown = rem_int_[e] == 0;
            } else {
                rem_real_[e] -= wmin_real;
                grown = rem_real_[e] <= 0.0;
            }
            if (grown) {
                erasure.edges.push_back(e);
                grown_scratch_.push_back(e);
            }
        }

        active_.insert({bcount_[r], r});  // parity unchanged by growth

        uint32_t merges = 0;
        for (uint32_t e : grown_scratch_) {
            uint32_t a = find(g_->edges[e].u);
            uint32_t b = find(g_->edges[e].v);
            if (a != b) {
                unite(a, b);
                ++merges;
            }
        }
        if (trace_)
            trace_->steps.push_back({r, integer_mode_ ? double(wmin_int) : wmin_real, kept,
                                     merges});
    }

    erasure.growth_steps = iterations;
    return erasure;
}

Correction UfDecoder::peel(const Erasure& erasure, std::span<const uint32_t> events) {
    ++peel_epoch_;
    touched_.clear();

    auto compact = [&](uint32_t v) -> uint32_t {
        if (cvstamp_[v] != peel_epoch_) {
            cvstamp_[v] = peel_epoch_;
            cvid_[v] = uint32_t(touched_.size());
            touched_.push_back(v);
        }
        return cvid_[v];
    };

    // Vertices of the erasure, in first-appearance order.
    eids_.assign(erasure.edges.begin(), erasure.edges.end());
    std::sort(eids_.begin(), eids_.end(), [&](uint32_t a, uint32_t b) {
        return g_->rank_of_edge[a] < g_->rank_of_edge[b];
    });
    for (uint32_t e : eids_) {
        compact(g_->edges[e].u);
        compact(g_->edges[e].v);
    }

    Correction corr;
    excited_.assign(touched_.size(), 0);
    for (uint32_t v : events) {
        if (cvstamp_[v] != peel_epoch_)
            throw ParityError("peel: detection event outside the erasure");
        excited_[cvid_[v]] = 1;
    }
    if (eids_.empty()) return corr;

    // Minimum-weight spanning forest (Kruskal over the presorted erasure).
    const uint32_t k = uint32_t(touched_.size());
    forest_dsu_.reset(k);
    forest_.clear();
    for (uint32_t e : eids_) {
        uint32_t cu = cvid_[g_->edges[e].u];
        uint32_t cv = cvid_[g_->edges[e].v];
        if (forest_dsu_.find(cu) != forest_dsu_.find(cv)) {
            forest_dsu_.unite(cu, cv);
            forest_.push_back(e);
        }
    }

    // Compact adjacency of the forest.
    deg_.assign(k, 0);
    off_.assign(k + 1, 0);
    for (uint32_t e : forest_) {
        ++deg_[cvid_[g_->edges[e].u]];
        ++deg_[cvid_[g_->edges[e].v]];
    }
    for (uint32_t v = 0; v < k; ++v) off_[v + 1] = off_[v] + deg_[v];
    adj_.resize(off_.back());
    cursor_.assign(off_.begin(), off_.end() - 1);
    for (uint32_t e : forest_) {
        adj_[cursor_[cvid_[g_->edges[e].u]]++] = e;
        adj_[cursor_[cvid_[g_->edges[e].v]]++] = e;
    }
    cursor_.assign(off_.begin(), off_.end() - 1);

    // Leaf peeling: an excited leaf emits its pendant edge and hands the
    // excitation to the other endpoint.
    queue_.clear();
    for (uint32_t v = 0; v < k; ++v)
        if (deg_[v] == 1) queue_.push_back(v);

    for (size_t qi = 0; qi < queue_.size(); ++qi) {
        uint32_t v = queue_[qi];
        if (deg_[v] != 1) continue;  // degree dropped to 0 meanwhile
        uint32_t e = kNil;
        while (cursor_[v] < off_[v + 1]) {
            uint32_t cand = adj_[cursor_[v]];
            if (!edge_done_[cand]) {
                e = cand;
                break;
            }
            ++cursor_[v];
        }
        assert(e != kNil);
        uint32_t u = cvid_[g_->other_endpoint(e, touched_[v])];
        edge_done_[e] = 1;
        deg_[v] = 0;
        --deg_[u];
        if (excited_[v]) {
            corr.edges.push_back(e);
            excited_[v] = 0;
            excited_[u] ^= 1;
        }
        if (deg_[u] == 1) queue_.push_back(u);
        ++corr.peeled_edges;
    }
    for (uint32_t e : forest_) edge_done_[e] = 0;  // restore shared scratch

    for (uint8_t x : excited_)
        if (x) throw ParityError("peel: erasure component with odd excitation parity");

    std::sort(corr.edges.begin(), corr.edges.end());
    for (uint32_t e : corr.edges) {
        corr.le_h ^= g_->edges[e].le_h;
        corr.le_v ^= g_->edges[e].le_v;
    }
    return corr;
}

Correction UfDecoder::decode(std::span<const uint32_t> events) {
    Erasure erasure = syndrome_validation(events);
    Correction corr = peel(erasure, events);
    corr.growth_steps = erasure.growth_steps;
    return corr;
}

std::vector<uint32_t> induced_flips(const DecoderGraph& g, std::span<const uint32_t> edges) {
    std::vector<uint32_t> flips;
    flips.reserve(2 * edges.size());
    for (uint32_t e : edges) {
        flips.push_back(g.edges[e].u);
        flips.push_back(g.edges[e].v);
    }
    std::sort(flips.begin(), flips.end());
    std::vector<uint32_t> out;
    for (size_t i = 0; i < flips.size();) {
        size_t j = i;
        while (j < flips.size() && flips[j] == flips[i]) ++j;
        if ((j - i) % 2 != 0) out.push_back(flips[i]);
        i = j;
    }
    return out;
}

}  // namespace wuf
