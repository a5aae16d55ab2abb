#include "wuf/decoder_graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "wuf/circuit_sim.h"
#include "wuf/rng.h"

namespace wuf {

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::spacelike: return "spacelike";
        case EdgeKind::timelike: return "timelike";
        case EdgeKind::diagonal: return "diagonal";
    }
    return "?";
}

const char* to_string(WeightMode m) {
    switch (m) {
        case WeightMode::weighted: return "weighted";
        case WeightMode::unweighted: return "unweighted";
        case WeightMode::truncated: return "truncated";
    }
    return "?";
}

WeightMode weight_mode_from_string(const std::string& s) {
    if (s == "weighted") return WeightMode::weighted;
    if (s == "unweighted") return WeightMode::unweighted;
    if (s == "truncated") return WeightMode::truncated;
    throw DomainError("unknown weight mode: " + s);
}

double edge_weight(double p_e) {
    if (!(p_e > 0.0 && p_e < 1.0)) throw DomainError("edge_weight: p must lie in (0, 1)");
    return std::log((1.0 - p_e) / p_e);
}

namespace {

EdgeKind classify(const Lattice& lat, uint32_t u, uint32_t v) {
    bool same_cell = lat.det_i(u) == lat.det_i(v) && lat.det_j(u) == lat.det_j(v);
    bool same_layer = lat.det_t(u) == lat.det_t(v);
    if (same_layer) return EdgeKind::spacelike;
    if (same_cell) return EdgeKind::timelike;
    return EdgeKind::diagonal;
}

// Accumulates fault contributions keyed by detector pair.
class EdgeAccumulator {
public:
    explicit EdgeAccumulator(const Lattice& lat) : lat_(lat) { index_.reserve(1 << 12); }

    void reserve(size_t n) {
        index_.reserve(2 * n);
        edges_.reserve(n);
    }

    void add(uint32_t a, uint32_t b, double prob, bool le_h, bool le_v) {
        if (a == b) throw GraphBuildError("fault produced a self-loop edge");
        uint32_t u = std::min(a, b), v = std::max(a, b);
        uint64_t key = (uint64_t(u) << 32) | v;
        auto [it, fresh] = index_.try_emplace(key, uint32_t(edges_.size()));
        if (fresh) {
            EdgeRecord e;
            e.u = u;
            e.v = v;
            e.p_sum = prob;
            e.kind = classify(lat_, u, v);
            e.le_h = le_h;
            e.le_v = le_v;
            edges_.push_back(e);
        } else {
            EdgeRecord& e = edges_[it->second];
            if (e.le_h != uint8_t(le_h) || e.le_v != uint8_t(le_v))
                throw GraphBuildError("faults grouped onto one edge disagree on logical effect");
            e.p_sum += prob;
        }
    }

    std::vector<EdgeRecord> take() {
        std::sort(edges_.begin(), edges_.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        return std::move(edges_);
    }

private:
    Lattice lat_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<EdgeRecord> edges_;
};

void build_adjacency(DecoderGraph& g) {
    g.adj_offsets.assign(g.n_detectors + 1, 0);
    for (const EdgeRecord& e : g.edges) {
        ++g.adj_offsets[e.u + 1];
        ++g.adj_offsets[e.v + 1];
    }
    for (uint32_t v = 0; v < g.n_detectors; ++v) g.adj_offsets[v + 1] += g.adj_offsets[v];
    g.adj_edges.resize(g.adj_offsets.back());
    std::vector<uint32_t> cursor(g.adj_offsets.begin(), g.adj_offsets.end() - 1);
    for (uint32_t e = 0; e < g.edges.size(); ++e) {
        g.adj_edges[cursor[g.edges[e].u]++] = e;
        g.adj_edges[cursor[g.edges[e].v]++] = e;
    }
}

DecoderGraph finalize_graph(GraphKind kind, const LatticeParams& params, WeightMode mode,
                            double eps, std::vector<EdgeRecord> edges) {
    DecoderGraph g;
    g.kind = kind;
    g.params = params;
    g.n_detectors = Lattice::n_detectors(params.d, params.rounds);
    g.edges = std::move(edges);
    g.raw_weight.resize(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) g.raw_weight[e] = edge_weight(g.edges[e].p_sum);
    build_adjacency(g);
    apply_weight_mode(g, mode, eps);
    return g;
}

// Logical support of one fault pattern: the set bits of the residual data
// planes in the relevant error sector, kept sparse so parities can be
// recomputed for each lattice translation.
struct SectorSupport {
    // (plane, i, j) with plane 0 = horizontal edges, 1 = vertical.
    std::vector<std::array<int, 3>> sites;

    // Crossing parities when the pattern is translated by (di, dj).
    // Horizontal crossings count vertical-plane sites in column 0 for the
    // X sector but horizontal-plane sites for the Z sector; the caller
    // passes which plane feeds which cut.
    std::pair<bool, bool> parities(const Lattice& lat, int di, int dj, int h_cut_plane,
                                   int v_cut_plane) const {
        int h = 0, v = 0;
        for (const auto& s : sites) {
            if (s[0] == h_cut_plane && lat.wrap(s[2] + dj) == 0) h ^= 1;
            if (s[0] == v_cut_plane && lat.wrap(s[1] + di) == 0) v ^= 1;
        }
        return {bool(h), bool(v)};
    }
};

SectorSupport collect_support(const BitGrid& hplane, const BitGrid& vplane) {
    SectorSupport s;
    hplane.for_each_set([&](int i, int j) { s.sites.push_back({0, i, j}); });
    vplane.for_each_set([&](int i, int j) { s.sites.push_back({1, i, j}); });
    return s;
}

struct BasePattern {
    // Event coordinates relative to a fault anchored at cell (0,0), round 0.
    struct GraphEvents {
        int n = 0;                       // 0 or 2
        std::array<int, 2> t{}, i{}, j{};
        SectorSupport support;
    };
    GraphEvents per_graph[2];
    double probability = 0.0;
};

BasePattern::GraphEvents
extract_events(const Lattice& lat, const std::vector<uint32_t>& events, SectorSupport support,
               const char* graph_name) {
    BasePattern::GraphEvents g;
    if (events.size() != 0 && events.size() != 2)
        throw GraphBuildError(std::string("single fault excites ") +
                              std::to_string(events.size()) + " detectors in the " + graph_name +
                              " graph");
    g.n = int(events.size());
    for (int k = 0; k < g.n; ++k) {
        g.t[k] = lat.det_t(events[k]);
        g.i[k] = lat.det_i(events[k]);
        g.j[k] = lat.det_j(events[k]);
        if (g.t[k] > 1)
            throw GraphBuildError("base fault pattern reaches beyond the next layer");
    }
    if (g.n == 0) {
        // A fault with no detection events must carry no logical effect in
        // this sector (its residual, if any, is a stabilizer).
        auto [h, v] = support.parities(lat, 0, 0, /*any*/ 0, 1);
        auto [h2, v2] = support.parities(lat, 0, 0, 1, 0);
        if (h || v || h2 || v2)
            throw GraphBuildError("event-free fault carries a logical effect");
    }
    g.support = std::move(support);
    return g;
}

}  // namespace

void apply_weight_mode(DecoderGraph& g, WeightMode mode, double eps) {
    g.mode = mode;
    g.epsilon = mode == WeightMode::truncated ? eps : 0.0;
    const size_t n = g.edges.size();
    g.int_weight.clear();
    switch (mode) {
        case WeightMode::weighted:
            for (size_t e = 0; e < n; ++e) g.edges[e].weight = g.raw_weight[e];
            break;
        case WeightMode::unweighted:
            g.int_weight.assign(n, 1);
            for (size_t e = 0; e < n; ++e) g.edges[e].weight = 1.0;
            break;
        case WeightMode::truncated: {
            if (!(eps > 0.0)) throw DomainError("quantize_weights: epsilon must be > 0");
            g.int_weight.resize(n);
            for (size_t e = 0; e < n; ++e) {
                int64_t q = std::llround(g.raw_weight[e] / eps);
                if (q < 1) q = 1;  // keep the graph connected
                g.int_weight[e] = q;
                g.edges[e].weight = double(q) * eps;
            }
            break;
        }
    }
    rebuild_derived_weights(g);
}

void rebuild_derived_weights(DecoderGraph& g) {
    const size_t n = g.edges.size();
    uint64_t guard = g.n_detectors;
    if (g.int_weight.empty()) {
        guard += n;
    } else {
        for (int64_t w : g.int_weight) guard += uint64_t(w);
    }
    g.growth_guard = guard;

    g.rank_of_edge.resize(n);
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return g.edges[a].weight < g.edges[b].weight;
    });
    for (uint32_t r = 0; r < n; ++r) g.rank_of_edge[order[r]] = r;
}

DecoderGraph quantize_weights(DecoderGraph g, double eps) {
    if (!(eps > 0.0)) throw DomainError("quantize_weights: epsilon must be > 0");
    apply_weight_mode(g, WeightMode::truncated, eps);
    return g;
}

void assign_random_weights(DecoderGraph& g, double w_lo, double w_hi, uint64_t seed) {
    if (!(w_lo > 0.0 && w_lo < w_hi && w_hi < 1.0))
        throw DomainError("assign_random_weights: need 0 < w_lo < w_hi < 1");
    Rng rng(seed, g.kind == GraphKind::primal ? 0 : 1);
    for (size_t e = 0; e < g.edges.size(); ++e)
        g.raw_weight[e] = edge_weight(rng.uniform_in(w_lo, w_hi));
    apply_weight_mode(g, g.mode, g.epsilon);
}

std::pair<DecoderGraph, DecoderGraph> build_decoder_graphs(const LatticeParams& params,
                                                           WeightMode mode, double eps) {
    params.validate();
    if (!(params.p > 0.0)) throw DomainError("build_decoder_graphs: p must be > 0");
    const Lattice lat(params.d);
    const int d = params.d;

    // Patterns of every fault anchored at cell (0,0) of round 0, simulated
    // with a single noisy round. All other faults are space-time translates:
    // the schedule is translation invariant on the torus and a fault at
    // round r only excites layers r and r+1.
    LatticeParams base{params.d, 1, params.p};
    FrameSimulator sim(base);
    std::vector<BasePattern> patterns;
    for (const FaultSite& site : enumerate_fault_sites(base)) {
        if (site.i != 0 || site.j != 0) continue;
        ShotRecord rec = sim.inject_fault(site);
        BasePattern pat;
        pat.probability = site.probability;
        pat.per_graph[0] = extract_events(
            lat, rec.events_primal, collect_support(sim.residual_hx(), sim.residual_vx()),
            "primal");
        pat.per_graph[1] = extract_events(
            lat, rec.events_dual, collect_support(sim.residual_hz(), sim.residual_vz()), "dual");
        patterns.push_back(std::move(pat));
    }

    EdgeAccumulator acc[2] = {EdgeAccumulator(lat), EdgeAccumulator(lat)};
    size_t anchors = size_t(params.rounds) * size_t(d) * size_t(d);
    acc[0].reserve(8 * anchors);
    acc[1].reserve(8 * anchors);

    for (const BasePattern& pat : patterns) {
        for (int graph = 0; graph < 2; ++graph) {
            const auto& pg = pat.per_graph[graph];
            if (pg.n == 0) continue;
            // X errors cross the horizontal cut on vertical edges and the
            // vertical cut on horizontal edges; Z errors the other way.
            const int h_cut_plane = graph == 0 ? 1 : 0;
            const int v_cut_plane = graph == 0 ? 0 : 1;
            for (int t = 0; t < params.rounds; ++t) {
                for (int di = 0; di < d; ++di) {
                    for (int dj = 0; dj < d; ++dj) {
                        uint32_t a = lat.detector(t + pg.t[0], di + pg.i[0], dj + pg.j[0]);
                        uint32_t b = lat.detector(t + pg.t[1], di + pg.i[1], dj + pg.j[1]);
                        auto [h, v] = pg.support.parities(lat, di, dj, h_cut_plane, v_cut_plane);
                        acc[graph].add(a, b, pat.probability, h, v);
                    }
                }
            }
        }
    }

    return {finalize_graph(GraphKind::primal, params, mode, eps, acc[0].take()),
            finalize_graph(GraphKind::dual, params, mode, eps, acc[1].take())};
}

std::pair<DecoderGraph, DecoderGraph> build_decoder_graphs_direct(const LatticeParams& params,
                                                                  WeightMode mode, double eps) {
    params.validate();
    if (!(params.p > 0.0)) throw DomainError("build_decoder_graphs: p must be > 0");
    const Lattice lat(params.d);
    FrameSimulator sim(params);
    EdgeAccumulator acc[2] = {EdgeAccumulator(lat), EdgeAccumulator(lat)};

    for (const FaultSite& site : enumerate_fault_sites(params)) {
        ShotRecord rec = sim.inject_fault(site);
        for (int graph = 0; graph < 2; ++graph) {
            const auto& ev = graph == 0 ? rec.events_primal : rec.events_dual;
            bool le_h = rec.true_logical[2 * graph + 0];
            bool le_v = rec.true_logical[2 * graph + 1];
            if (ev.empty()) {
                if (le_h || le_v)
                    throw GraphBuildError("event-free fault carries a logical effect");
                continue;
            }
            if (ev.size() != 2)
                throw GraphBuildError("single fault excites " + std::to_string(ev.size()) +
                                      " detectors in one graph");
            acc[graph].add(ev[0], ev[1], site.probability, le_h, le_v);
        }
    }

    return {finalize_graph(GraphKind::primal, params, mode, eps, acc[0].take()),
            finalize_graph(GraphKind::dual, params, mode, eps, acc[1].take())};
}

}  // namespace wuf
