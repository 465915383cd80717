#include "sqfactor/certificate.hpp"

#include <algorithm>

#include <json.hpp>

#include "sqfactor/errors.hpp"

namespace sqfactor {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<std::size_t> FactorCertificate::degrees() const {
    std::vector<std::size_t> deg(host.vertex_count(), 0);
    for (const TaggedEdge& te : edges) {
        ++deg[te.edge.u];
        ++deg[te.edge.v];
    }
    return deg;
}

const Designation* FactorCertificate::designation_at(VertexId v) const {
    auto it = std::lower_bound(cuts.begin(), cuts.end(), v,
                               [](const Designation& d, VertexId x) { return d.vertex < x; });
    return it != cuts.end() && it->vertex == v ? &*it : nullptr;
}

std::vector<TaggedEdge> tag_edges(const Graph& host, const std::vector<Edge>& edges) {
    std::vector<TaggedEdge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        out.push_back({e, host.has_edge(e.u, e.v) ? EdgeOrigin::original : EdgeOrigin::square_only});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

ordered_json designation_json(const Designation& d) {
    return {{"vertex", d.vertex}, {"edges", ordered_json::array({edge_json(d.edges[0]), edge_json(d.edges[1])})}};
}

Edge edge_from(const json& j) { return {j.at(0).get<VertexId>(), j.at(1).get<VertexId>()}; }

Designation designation_from(const json& j) {
    Designation d;
    d.vertex = j.at("vertex").get<VertexId>();
    d.edges = {edge_from(j.at("edges").at(0)), edge_from(j.at("edges").at(1))};
    return d;
}

}  // namespace

std::string certificate_to_json(const FactorCertificate& cert) {
    ordered_json doc;
    doc["kind"] = cert.kind == FactorCertificate::Kind::lemma ? "lemma" : "theorem";

    ordered_json graph;
    graph["n"] = cert.host.vertex_count();
    auto host_edges = ordered_json::array();
    for (const Edge& e : cert.host.edges()) {
        host_edges.push_back(edge_json(e));
    }
    graph["edges"] = std::move(host_edges);
    if (!cert.host.has_identity_labels()) {
        graph["labels"] = cert.host.labels();
    }
    doc["graph"] = std::move(graph);

    auto edges = ordered_json::array();
    for (const TaggedEdge& te : cert.edges) {
        edges.push_back({{"u", te.edge.u},
                         {"v", te.edge.v},
                         {"origin", te.origin == EdgeOrigin::original ? "original" : "square"}});
    }
    doc["edges"] = std::move(edges);
    doc["u"] = cert.u ? designation_json(*cert.u) : ordered_json(nullptr);
    auto cuts = ordered_json::array();
    for (const Designation& d : cert.cuts) {
        cuts.push_back(designation_json(d));
    }
    doc["cuts"] = std::move(cuts);
    return doc.dump(2);
}

FactorCertificate certificate_from_json(std::string_view text) {
    try {
        json doc = json::parse(text);
        FactorCertificate cert;
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "lemma") {
            cert.kind = FactorCertificate::Kind::lemma;
        } else if (kind == "theorem") {
            cert.kind = FactorCertificate::Kind::theorem;
        } else {
            throw format_error("certificate kind must be \"lemma\" or \"theorem\"");
        }
        const json& graph = doc.at("graph");
        std::vector<Edge> host_edges;
        for (const auto& e : graph.at("edges")) {
            host_edges.push_back(edge_from(e));
        }
        std::vector<std::uint64_t> labels;
        if (graph.contains("labels")) {
            labels = graph["labels"].get<std::vector<std::uint64_t>>();
        }
        cert.host = Graph::from_edges(graph.at("n").get<std::size_t>(), host_edges, std::move(labels));

        // Edges are kept as written (duplicates included) so the verifier sees exactly what was claimed.
        for (const auto& e : doc.at("edges")) {
            const auto origin = e.at("origin").get<std::string>();
            if (origin != "original" && origin != "square") {
                throw format_error("edge origin must be \"original\" or \"square\"");
            }
            cert.edges.push_back({Edge(e.at("u").get<VertexId>(), e.at("v").get<VertexId>()),
                                  origin == "original" ? EdgeOrigin::original : EdgeOrigin::square_only});
        }
        if (doc.contains("u") && !doc["u"].is_null()) {
            cert.u = designation_from(doc["u"]);
        }
        if (doc.contains("cuts")) {
            for (const auto& d : doc["cuts"]) {
                cert.cuts.push_back(designation_from(d));
            }
        }
        std::sort(cert.cuts.begin(), cert.cuts.end());
        return cert;
    } catch (const json::exception& ex) {
        throw format_error(std::string("certificate JSON: ") + ex.what());
    } catch (const argument_error& ex) {
        throw format_error(std::string("certificate JSON: ") + ex.what());
    }
}

}  // namespace sqfactor
