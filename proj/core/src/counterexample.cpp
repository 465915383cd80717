#include "sqfactor/counterexample.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "sqfactor/errors.hpp"

namespace sqfactor {

AttachmentGraph triangle_attachment() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
    return {Graph::from_edges(3, edges), 0, kNoVertex};
}

namespace {

VertexId resolve_arc_end(const AttachmentGraph& att, const char* name) {
    const Graph& g = att.graph;
    if (!g.has_vertex(att.hub)) {
        throw argument_error(std::string(name) + ": hub is not a vertex");
    }
    if (att.arc_end != kNoVertex) {
        if (!g.has_vertex(att.arc_end)) {
            throw argument_error(std::string(name) + ": arc endpoint is not a vertex");
        }
        return att.arc_end;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v != att.hub) {
            return v;
        }
    }
    return att.hub;
}

}  // namespace

std::pair<Graph, CounterexampleDescriptor> gen_counterexample(unsigned s, const AttachmentGraph& g1,
                                                              const AttachmentGraph& g2) {
    if (s == 0) {
        throw argument_error("s must be a positive integer");
    }
    for (const auto* att : {&g1, &g2}) {
        if (att->graph.vertex_count() == 0 || !is_connected(att->graph) ||
            !is_essentially_two_edge_connected(att->graph)) {
            throw argument_error("attachment graphs must be connected and essentially 2-edge connected");
        }
    }
    const VertexId arc1 = resolve_arc_end(g1, "g1");
    const VertexId arc2 = resolve_arc_end(g2, "g2");

    CounterexampleDescriptor d;
    d.s = s;
    const VertexId offset2 = static_cast<VertexId>(g1.graph.vertex_count());
    VertexId next = offset2 + static_cast<VertexId>(g2.graph.vertex_count());
    std::vector<Edge> edges = g1.graph.edges();
    for (const Edge& e : g2.graph.edges()) {
        edges.emplace_back(e.u + offset2, e.v + offset2);
    }
    for (VertexId v = 0; v < offset2; ++v) {
        d.g1_vertices.push_back(v);
    }
    for (VertexId v = offset2; v < next; ++v) {
        d.g2_vertices.push_back(v);
    }
    d.hub_a = g1.hub;
    d.hub_b = g2.hub + offset2;
    for (unsigned i = 0; i < 4 * s + 1; ++i) {
        const VertexId w = next++;
        const VertexId leaf = next++;
        edges.emplace_back(w, d.hub_a);
        edges.emplace_back(w, d.hub_b);
        edges.emplace_back(w, leaf);
        d.spokes.emplace_back(w, leaf);
    }
    d.arc = Edge(arc1, arc2 + offset2);
    edges.push_back(d.arc);

    Graph g = Graph::from_edges(next, edges);
    d.essentially_two_edge_connected = is_essentially_two_edge_connected(g);
    if (!d.essentially_two_edge_connected) {
        throw internal_error("generated family member is not essentially 2-edge connected");
    }
    std::vector<bool> keep(g.vertex_count(), true);
    for (const auto& [w, leaf] : d.spokes) {
        keep[leaf] = false;
    }
    d.leaf_deleted_two_connected = is_biconnected(induced_subgraph(g, keep).graph);
    return {std::move(g), std::move(d)};
}

std::optional<CountingProof> counting_certificate(const Graph& g, const CounterexampleDescriptor& d) {
    if (d.s == 0 || d.spokes.size() != 4 * static_cast<std::size_t>(d.s) + 1 || !g.has_vertex(d.hub_a) ||
        !g.has_vertex(d.hub_b) || d.hub_a == d.hub_b) {
        return std::nullopt;
    }
    const Graph sq = square(g);
    CountingProof proof;
    proof.s = d.s;
    std::set<VertexId> distinct;
    for (const auto& [w, leaf] : d.spokes) {
        if (!g.has_vertex(w) || !g.has_vertex(leaf) || !distinct.insert(leaf).second) {
            return std::nullopt;
        }
        if (g.degree(leaf) != 1 || !g.has_edge(w, leaf)) {
            return std::nullopt;
        }
        std::vector<VertexId> expected{w, d.hub_a, d.hub_b};
        std::sort(expected.begin(), expected.end());
        auto actual = sq.neighbors(leaf);
        if (!std::equal(actual.begin(), actual.end(), expected.begin(), expected.end())) {
            return std::nullopt;
        }
        proof.leaves.push_back(leaf);
    }
    proof.demand = proof.leaves.size();
    proof.capacity = 2 * (2 * static_cast<std::size_t>(d.s));
    proof.argument = "each of the " + std::to_string(proof.demand) +
                     " leaves has square neighbourhood {w_i, a, b}; positive even degree forces at least one of its "
                     "factor edges into {a, b}, but a and b have degree at most " +
                     std::to_string(2 * d.s) + " each, leaving " + std::to_string(proof.capacity) + " slots";
    if (proof.demand <= proof.capacity) {
        return std::nullopt;
    }
    return proof;
}

std::string descriptor_to_json(const CounterexampleDescriptor& d) {
    nlohmann::ordered_json doc;
    doc["s"] = d.s;
    doc["hubA"] = d.hub_a;
    doc["hubB"] = d.hub_b;
    auto spokes = nlohmann::ordered_json::array();
    for (const auto& [w, leaf] : d.spokes) {
        spokes.push_back({w, leaf});
    }
    doc["spokes"] = std::move(spokes);
    doc["g1"] = d.g1_vertices;
    doc["g2"] = d.g2_vertices;
    doc["arc"] = {d.arc.u, d.arc.v};
    doc["essentially2EdgeConnected"] = d.essentially_two_edge_connected;
    doc["leafDeleted2Connected"] = d.leaf_deleted_two_connected;
    return doc.dump();
}

CounterexampleDescriptor descriptor_from_json(std::string_view text) {
    try {
        auto doc = nlohmann::json::parse(text);
        CounterexampleDescriptor d;
        d.s = doc.at("s").get<unsigned>();
        d.hub_a = doc.at("hubA").get<VertexId>();
        d.hub_b = doc.at("hubB").get<VertexId>();
        for (const auto& spoke : doc.at("spokes")) {
            d.spokes.emplace_back(spoke.at(0).get<VertexId>(), spoke.at(1).get<VertexId>());
        }
        d.g1_vertices = doc.at("g1").get<std::vector<VertexId>>();
        d.g2_vertices = doc.at("g2").get<std::vector<VertexId>>();
        d.arc = Edge(doc.at("arc").at(0).get<VertexId>(), doc.at("arc").at(1).get<VertexId>());
        d.essentially_two_edge_connected = doc.value("essentially2EdgeConnected", false);
        d.leaf_deleted_two_connected = doc.value("leafDeleted2Connected", false);
        return d;
    } catch (const nlohmann::json::exception& ex) {
        throw format_error(std::string("descriptor JSON: ") + ex.what());
    }
}

}  // namespace sqfactor
