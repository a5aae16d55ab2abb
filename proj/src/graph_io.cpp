#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wuf/decoder_graph.h"

namespace wuf {

namespace {

using nlohmann::json;

// The file format pins weights and probabilities to 9 significant digits so
// that both build paths emit byte-identical documents.
double round9(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::strtod(buf, nullptr);
}

json graph_to_json(const DecoderGraph& g) {
    const Lattice lat(g.params.d);
    json detectors = json::array();
    for (uint32_t v = 0; v < g.n_detectors; ++v)
        detectors.push_back({lat.det_t(v), lat.det_i(v), lat.det_j(v)});
    json edges = json::array();
    for (const EdgeRecord& e : g.edges)
        edges.push_back({e.u, e.v, round9(e.p_sum), round9(e.weight), to_string(e.kind),
                         int(e.le_h), int(e.le_v)});
    return {{"kind", to_string(g.kind)}, {"detectors", std::move(detectors)},
            {"edges", std::move(edges)}};
}

DecoderGraph graph_from_json(const json& jg, const LatticeParams& params, WeightMode mode,
                             double eps) {
    DecoderGraph g;
    g.kind = jg.at("kind").get<std::string>() == "primal" ? GraphKind::primal : GraphKind::dual;
    g.params = params;
    g.mode = mode;
    g.epsilon = mode == WeightMode::truncated ? eps : 0.0;
    g.n_detectors = Lattice::n_detectors(params.d, params.rounds);
    if (jg.at("detectors").size() != g.n_detectors)
        throw DomainError("graph file: detector count does not match d and rounds");

    const auto& jedges = jg.at("edges");
    g.edges.reserve(jedges.size());
    g.raw_weight.reserve(jedges.size());
    for (const auto& je : jedges) {
        EdgeRecord e;
        e.u = je.at(0).get<uint32_t>();
        e.v = je.at(1).get<uint32_t>();
        e.p_sum = je.at(2).get<double>();
        e.weight = je.at(3).get<double>();
        std::string kind = je.at(4).get<std::string>();
        e.kind = kind == "spacelike" ? EdgeKind::spacelike
               : kind == "timelike"  ? EdgeKind::timelike
                                     : EdgeKind::diagonal;
        e.le_h = uint8_t(je.at(5).get<int>());
        e.le_v = uint8_t(je.at(6).get<int>());
        if (e.u >= g.n_detectors || e.v >= g.n_detectors || e.u == e.v)
            throw DomainError("graph file: bad edge endpoints");
        g.edges.push_back(e);
        // Stored weights are authoritative; raw log-odds are kept around
        // only so a loaded graph can be re-moded.
        g.raw_weight.push_back(mode == WeightMode::weighted ? e.weight : edge_weight(e.p_sum));
    }

    switch (mode) {
        case WeightMode::weighted:
            break;
        case WeightMode::unweighted:
            g.int_weight.assign(g.edges.size(), 1);
            break;
        case WeightMode::truncated:
            if (!(eps > 0.0)) throw DomainError("graph file: truncated mode without epsilon");
            g.int_weight.resize(g.edges.size());
            for (size_t e = 0; e < g.edges.size(); ++e) {
                int64_t q = std::llround(g.edges[e].weight / eps);
                g.int_weight[e] = q < 1 ? 1 : q;
            }
            break;
    }

    // Adjacency and ranks.
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
    rebuild_derived_weights(g);
    return g;
}

}  // namespace

std::string graphs_to_json(const DecoderGraph& primal, const DecoderGraph& dual) {
    json doc = {{"d", primal.params.d},
                {"rounds", primal.params.rounds},
                {"p", round9(primal.params.p)},
                {"mode", to_string(primal.mode)},
                {"epsilon", primal.epsilon},
                {"graphs", json::array({graph_to_json(primal), graph_to_json(dual)})}};
    return doc.dump();
}

std::pair<DecoderGraph, DecoderGraph> graphs_from_json(const std::string& text) {
    json doc = json::parse(text);
    LatticeParams params;
    params.d = doc.at("d").get<int>();
    params.rounds = doc.at("rounds").get<int>();
    params.p = doc.at("p").get<double>();
    params.validate();
    WeightMode mode = weight_mode_from_string(doc.at("mode").get<std::string>());
    double eps = doc.at("epsilon").get<double>();
    const auto& graphs = doc.at("graphs");
    if (graphs.size() != 2) throw DomainError("graph file: expected two graphs");
    DecoderGraph primal = graph_from_json(graphs.at(0), params, mode, eps);
    DecoderGraph dual = graph_from_json(graphs.at(1), params, mode, eps);
    if (primal.kind != GraphKind::primal || dual.kind != GraphKind::dual)
        throw DomainError("graph file: graphs out of order");
    return {std::move(primal), std::move(dual)};
}

void write_graphs(const std::string& path, const DecoderGraph& primal, const DecoderGraph& dual) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << graphs_to_json(primal, dual) << "\n";
}

std::pair<DecoderGraph, DecoderGraph> read_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return graphs_from_json(ss.str());
}

}  // namespace wuf
