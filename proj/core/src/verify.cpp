#include "sqfactor/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace sqfactor {

bool VerificationReport::pass() const {
    bool ok = spanning && connected && all_even && max_degree_ok && edges_in_square;
    if (properties) {
        for (const PropertyResult& p : *properties) {
            ok = ok && p.pass;
        }
    }
    return ok;
}

namespace {

std::string vertex_text(const Graph& g, VertexId v) {
    return g.has_vertex(v) ? std::to_string(g.label(v)) : "#" + std::to_string(v);
}

std::string edge_text(const Graph& g, const Edge& e) { return vertex_text(g, e.u) + "-" + vertex_text(g, e.v); }

/// Number of components of g after deleting the vertices in `removed` and the single edge `skip`.
std::size_t components_without(const Graph& g, const std::vector<bool>& removed, std::optional<Edge> skip) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (removed[s] || seen[s]) {
            continue;
        }
        ++count;
        std::vector<VertexId> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (removed[w] || seen[w] || (skip && Edge(v, w) == *skip)) {
                    continue;
                }
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return count;
}

/// Brute-force structure of g: which vertices are cut vertices, trivial cut vertices, and which edges are trivial bridges.
struct BruteStructure {
    std::vector<bool> cut;
    std::vector<bool> trivial_cut;
    std::set<Edge> trivial_bridges;

    explicit BruteStructure(const Graph& g) : cut(g.vertex_count(), false), trivial_cut(g.vertex_count(), false) {
        const std::size_t n = g.vertex_count();
        std::vector<bool> none(n, false);
        const std::size_t base = components_without(g, none, std::nullopt);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<bool> removed(n, false);
            removed[v] = true;
            cut[v] = components_without(g, removed, std::nullopt) > base;
            if (!cut[v]) {
                continue;
            }
            bool has_leaf = false;
            for (VertexId w : g.neighbors(v)) {
                if (g.degree(w) == 1) {
                    removed[w] = true;
                    has_leaf = true;
                }
            }
            if (!has_leaf) {
                continue;
            }
            std::vector<bool> leaves_only = removed;
            leaves_only[v] = false;
            trivial_cut[v] = components_without(g, removed, std::nullopt) <= components_without(g, leaves_only, std::nullopt);
        }
        for (const Edge& e : g.edges()) {
            if ((g.degree(e.u) == 1 || g.degree(e.v) == 1) && components_without(g, none, e) > base) {
                trivial_bridges.insert(e);
            }
        }
    }
};

}  // namespace

VerificationReport verify_factor(const Graph& g, std::span<const TaggedEdge> edges, unsigned s) {
    VerificationReport report;
    const std::size_t n = g.vertex_count();
    const Graph sq = square(g);
    std::set<Edge> seen;
    std::vector<std::vector<VertexId>> adjacency(n);

    for (const TaggedEdge& te : edges) {
        const Edge& e = te.edge;
        if (e.u == e.v || !g.has_vertex(e.v)) {
            report.edges_in_square = false;
            report.witnesses.push_back("invalid edge " + edge_text(g, e));
            continue;
        }
        if (!seen.insert(e).second) {
            report.edges_in_square = false;
            report.witnesses.push_back("duplicate edge " + edge_text(g, e));
            continue;
        }
        if (!sq.has_edge(e.u, e.v)) {
            report.edges_in_square = false;
            report.witnesses.push_back("edge " + edge_text(g, e) + " is not in the square");
        }
        const bool original = g.has_edge(e.u, e.v);
        if (original != (te.origin == EdgeOrigin::original)) {
            report.edges_in_square = false;
            report.witnesses.push_back("edge " + edge_text(g, e) + " has a wrong origin tag");
        }
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }

    for (VertexId v = 0; v < n; ++v) {
        const std::size_t d = adjacency[v].size();
        if (d == 0) {
            report.spanning = false;
            report.witnesses.push_back("vertex " + vertex_text(g, v) + " is not covered");
        }
        if (d % 2 != 0) {
            report.all_even = false;
            report.witnesses.push_back("vertex " + vertex_text(g, v) + " has odd degree " + std::to_string(d));
        }
        if (d > 2 * static_cast<std::size_t>(s)) {
            report.max_degree_ok = false;
            report.witnesses.push_back("vertex " + vertex_text(g, v) + " has degree " + std::to_string(d) + " > " +
                                       std::to_string(2 * s));
        }
    }

    if (n > 0) {
        std::vector<bool> reached(n, false);
        std::vector<VertexId> stack{0};
        reached[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adjacency[v]) {
                if (!reached[w]) {
                    reached[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        if (count != n) {
            report.connected = false;
            report.witnesses.push_back("factor has " + std::to_string(n - count) + " vertices unreachable from " +
                                       vertex_text(g, 0));
        }
    }
    return report;
}

VerificationReport verify_certificate(const Graph& g, const FactorCertificate& cert) {
    VerificationReport report = verify_factor(g, cert.edges, 2);
    if (!(cert.host == g)) {
        report.edges_in_square = false;
        report.witnesses.push_back("certificate host differs from the graph under test");
    }
    if (cert.kind != FactorCertificate::Kind::lemma) {
        return report;
    }

    std::array<PropertyResult, 5> props;
    auto fail = [&](std::size_t index, std::string why) {
        props[index].pass = false;
        props[index].witnesses.push_back(std::move(why));
    };
    const std::size_t n = g.vertex_count();
    const BruteStructure structure(g);
    std::set<Edge> factor;
    std::vector<std::size_t> degree(n, 0);
    for (const TaggedEdge& te : cert.edges) {
        if (te.edge.u != te.edge.v && g.has_vertex(te.edge.v) && factor.insert(te.edge).second) {
            ++degree[te.edge.u];
            ++degree[te.edge.v];
        }
    }
    auto designated_ok = [&](const Designation& des, std::size_t index, const std::string& who) {
        bool ok = true;
        if (des.edges[0] == des.edges[1]) {
            fail(index, who + " designates the same edge twice");
            ok = false;
        }
        for (const Edge& edge : des.edges) {
            if (!edge.contains(des.vertex)) {
                fail(index, who + " designates " + edge_text(g, edge) + " which is not incident to it");
                ok = false;
            } else if (!factor.contains(edge)) {
                fail(index, who + " designates " + edge_text(g, edge) + " which is not a factor edge");
                ok = false;
            } else if (!g.has_edge(edge.u, edge.v)) {
                fail(index, who + " designates square-only edge " + edge_text(g, edge));
                ok = false;
            }
        }
        return ok;
    };

    // (a) non-cut vertices have degree 2.
    for (VertexId v = 0; v < n; ++v) {
        if (!structure.cut[v] && degree[v] != 2) {
            fail(0, "non-cut vertex " + vertex_text(g, v) + " has degree " + std::to_string(degree[v]));
        }
    }

    // (b) both factor edges at u are original.
    if (cert.u) {
        const Designation& u = *cert.u;
        const std::string who = "u=" + vertex_text(g, u.vertex);
        if (!g.has_vertex(u.vertex)) {
            fail(1, who + " is not a vertex");
        } else {
            if (structure.cut[u.vertex] || g.degree(u.vertex) == 1) {
                fail(1, who + " is a cut vertex or a leaf");
            }
            if (designated_ok(u, 1, who) && degree[u.vertex] != 2) {
                fail(1, who + " has factor degree " + std::to_string(degree[u.vertex]) + ", so its designated edges are not all of its edges");
            }
        }
    }

    // (c) cut vertices: degree 4, two original designated edges, trivial bridges at trivial cut vertices.
    std::map<VertexId, const Designation*> by_vertex;
    for (const Designation& des : cert.cuts) {
        const std::string who = "cut vertex " + vertex_text(g, des.vertex);
        if (!g.has_vertex(des.vertex) || !structure.cut[des.vertex]) {
            fail(2, "designation at " + vertex_text(g, des.vertex) + " which is not a cut vertex");
            continue;
        }
        if (!by_vertex.emplace(des.vertex, &des).second) {
            fail(2, who + " has two designations");
            continue;
        }
        if (designated_ok(des, 2, who) && structure.trivial_cut[des.vertex]) {
            for (const Edge& edge : des.edges) {
                if (!structure.trivial_bridges.contains(edge)) {
                    fail(2, who + " is trivial but designates " + edge_text(g, edge) + ", not a trivial bridge");
                }
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (!structure.cut[v]) {
            continue;
        }
        if (degree[v] != 4) {
            fail(2, "cut vertex " + vertex_text(g, v) + " has degree " + std::to_string(degree[v]));
        }
        if (!by_vertex.contains(v)) {
            fail(2, "cut vertex " + vertex_text(g, v) + " has no designation");
        }
    }

    // (d), (e) designated pairs are pairwise disjoint.
    if (cert.u) {
        for (const Designation& des : cert.cuts) {
            for (const Edge& edge : des.edges) {
                if (edge == cert.u->edges[0] || edge == cert.u->edges[1]) {
                    fail(3, "edge " + edge_text(g, edge) + " is designated at u and at " + vertex_text(g, des.vertex));
                }
            }
        }
    }
    std::map<Edge, VertexId> owner;
    for (const Designation& des : cert.cuts) {
        for (const Edge& edge : des.edges) {
            auto [it, inserted] = owner.emplace(edge, des.vertex);
            if (!inserted && it->second != des.vertex) {
                fail(4, "edge " + edge_text(g, edge) + " is designated at " + vertex_text(g, it->second) + " and at " +
                            vertex_text(g, des.vertex));
            }
        }
    }

    report.properties = std::move(props);
    return report;
}

std::string report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["pass"] = report.pass();
    doc["spanning"] = report.spanning;
    doc["connected"] = report.connected;
    doc["allEven"] = report.all_even;
    doc["maxDegreeOk"] = report.max_degree_ok;
    doc["edgesInSquare"] = report.edges_in_square;
    if (report.properties) {
        nlohmann::ordered_json props;
        const char* names[] = {"a", "b", "c", "d", "e"};
        for (std::size_t i = 0; i < 5; ++i) {
            props[names[i]] = {{"pass", (*report.properties)[i].pass}, {"witnesses", (*report.properties)[i].witnesses}};
        }
        doc["properties"] = std::move(props);
    } else {
        doc["properties"] = nullptr;
    }
    doc["witnesses"] = report.witnesses;
    return doc.dump(2);
}

}  // namespace sqfactor
