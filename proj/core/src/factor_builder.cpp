#include "sqfactor/factor_builder.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sqfactor {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::degenerate_graph: return "degenerate_graph";
        case ViolationKind::small_star: return "small_star";
        case ViolationKind::nontrivial_bridge: return "nontrivial_bridge";
        case ViolationKind::bad_leaf: return "bad_leaf";
        case ViolationKind::bad_leaf_pair_at_distance_four: return "bad_leaf_pair_at_distance_four";
    }
    return "unknown";
}

std::string Violation::describe(const Graph& g) const {
    std::ostringstream out;
    out << to_string(kind);
    if (edge) {
        out << " " << g.label(edge->u) << "-" << g.label(edge->v);
    }
    for (VertexId v : vertices) {
        out << " " << g.label(v);
    }
    return out.str();
}

namespace {

std::string join_violations(const std::string& construction, const std::vector<Violation>& violations,
                            const Graph& g) {
    std::string text = construction + " hypotheses violated:";
    for (const Violation& v : violations) {
        text += " [" + v.describe(g) + "]";
    }
    return text;
}

}  // namespace

unmet_hypotheses::unmet_hypotheses(std::string construction, std::vector<Violation> violations, const Graph& g)
    : precondition_error(join_violations(construction, violations, g)), violations_(std::move(violations)) {}

VertexId star_center(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2 || g.edge_count() != n - 1) {
        return kNoVertex;
    }
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) {
            return v;
        }
    }
    return kNoVertex;
}

std::vector<Violation> check_lemma_preconditions(const Graph& g, const StructureClassification& cls) {
    if (VertexId c = star_center(g); c != kNoVertex && (g.vertex_count() == 3 || g.vertex_count() == 4)) {
        return {};
    }
    std::vector<Violation> out;
    for (const Edge& e : cls.nontrivial_bridges) {
        out.push_back({ViolationKind::nontrivial_bridge, {}, e});
    }
    for (VertexId x : cls.bad_leaves) {
        out.push_back({ViolationKind::bad_leaf, {x}, std::nullopt});
    }
    return out;
}

std::vector<Violation> check_theorem_preconditions(const Graph& g, const StructureClassification& cls) {
    std::vector<Violation> out;
    for (const Edge& e : cls.nontrivial_bridges) {
        out.push_back({ViolationKind::nontrivial_bridge, {}, e});
    }
    for (std::size_t i = 0; i < cls.bad_leaves.size(); ++i) {
        auto dist = bfs_distances(g, cls.bad_leaves[i]);
        for (std::size_t j = i + 1; j < cls.bad_leaves.size(); ++j) {
            std::size_t d = dist[cls.bad_leaves[j]];
            if (d < 3) {
                throw internal_error("bad leaves " + std::to_string(g.label(cls.bad_leaves[i])) + " and " +
                                     std::to_string(g.label(cls.bad_leaves[j])) + " are at distance " +
                                     std::to_string(d) + " < 3");
            }
            if (d == 4) {
                out.push_back({ViolationKind::bad_leaf_pair_at_distance_four,
                               {cls.bad_leaves[i], cls.bad_leaves[j]},
                               std::nullopt});
            }
        }
    }
    return out;
}

namespace {

/// Mutable simple edge set used while a factor is assembled.
class FactorDraft {
public:
    explicit FactorDraft(std::size_t n) : adjacency_(n) {}

    void add(Edge e) {
        if (e.u == e.v || !adjacency_[e.u].insert(e.v).second) {
            throw internal_error("factor edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " added twice");
        }
        adjacency_[e.v].insert(e.u);
    }

    void remove(Edge e) {
        if (adjacency_[e.u].erase(e.v) == 0) {
            throw internal_error("factor edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                 " removed but not present");
        }
        adjacency_[e.v].erase(e.u);
    }

    bool contains(Edge e) const { return adjacency_[e.u].contains(e.v); }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    const std::set<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (VertexId u = 0; u < adjacency_.size(); ++u) {
            for (VertexId v : adjacency_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

private:
    std::vector<std::set<VertexId>> adjacency_;
};

std::string format_steps(const std::vector<PeelStep>& steps) {
    std::ostringstream out;
    for (const PeelStep& step : steps) {
        out << "\n  block " << step.block << " cut " << static_cast<long long>(step.cut_vertex == kNoVertex ? -1 : step.cut_vertex)
            << " kind " << static_cast<int>(step.kind);
        for (const Edge& e : step.added) {
            out << " +" << e.u << "-" << e.v;
        }
        for (const Edge& e : step.removed) {
            out << " -" << e.u << "-" << e.v;
        }
    }
    return out.str();
}

void require_factor_degrees(const Graph& g, const std::vector<Edge>& edges, const std::string& context) {
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] != 2 && deg[v] != 4) {
            throw internal_error(context + ": vertex " + std::to_string(g.label(v)) + " ends with factor degree " +
                                 std::to_string(deg[v]));
        }
    }
}

LemmaConstruction star_factor(const Graph& g, VertexId center) {
    LemmaConstruction out;
    out.star = true;
    std::vector<VertexId> leaves(g.neighbors(center).begin(), g.neighbors(center).end());
    const std::size_t first_run = (leaves.size() + 1) / 2;
    std::vector<Edge> edges;
    auto add_run = [&](std::size_t begin, std::size_t end) {
        VertexId prev = center;
        for (std::size_t i = begin; i < end; ++i) {
            edges.emplace_back(prev, leaves[i]);
            prev = leaves[i];
        }
        edges.emplace_back(prev, center);
        out.leaf_cycles.push_back(std::vector<Edge>(edges.end() - static_cast<std::ptrdiff_t>(end - begin + 1), edges.end()));
    };
    add_run(0, first_run);
    add_run(first_run, leaves.size());

    out.certificate.kind = FactorCertificate::Kind::lemma;
    out.certificate.host = g;
    out.certificate.edges = tag_edges(g, edges);
    out.certificate.cuts.push_back({center, {Edge(center, leaves.front()), Edge(center, leaves[first_run - 1])}});
    return out;
}

}  // namespace

LemmaConstruction lemma_factor_traced(const Graph& g, std::optional<VertexId> u, const BuildOptions& options) {
    if (!is_connected(g)) {
        throw argument_error("lemma construction needs a connected graph");
    }
    if (g.vertex_count() < 3) {
        throw unmet_hypotheses("lemma", {{ViolationKind::degenerate_graph, {}, std::nullopt}}, g);
    }
    const VertexId center = star_center(g);
    if (center != kNoVertex && g.vertex_count() <= 4) {
        throw unmet_hypotheses("lemma", {{ViolationKind::small_star, {center}, std::nullopt}}, g);
    }
    const BlockCutTree host_bct = decompose(g);
    const StructureClassification cls = classify(g, host_bct);
    if (auto violations = check_lemma_preconditions(g, cls); !violations.empty()) {
        throw unmet_hypotheses("lemma", std::move(violations), g);
    }
    if (u) {
        if (!g.has_vertex(*u)) {
            throw argument_error("unknown vertex for u");
        }
        if (host_bct.is_cut_vertex(*u) || g.degree(*u) == 1) {
            throw precondition_error("u = " + std::to_string(g.label(*u)) + " must be neither a cut vertex nor a leaf");
        }
    }
    if (center != kNoVertex) {
        return star_factor(g, center);
    }

    LemmaConstruction out;
    std::vector<VertexId> removal;
    for (const auto& [y, leaves] : cls.leaf_sets) {
        removal.insert(removal.end(), leaves.begin(), leaves.end());
    }
    std::sort(removal.begin(), removal.end());
    out.stripped = strip(g, removal);
    const Graph& gp = out.stripped.graph;

    if (!check_lemma_preconditions(gp, classify(gp)).empty()) {
        throw internal_error("leaf-stripped graph does not satisfy the lemma hypotheses");
    }
    out.blocks = decompose(gp);
    std::optional<VertexId> root_vertex;
    if (u) {
        root_vertex = out.stripped.from_host[*u];
    }
    out.order = order_blocks(gp, out.blocks, root_vertex);

    FactorDraft draft(gp.vertex_count());
    std::map<VertexId, std::array<Edge, 2>> designated;
    std::map<VertexId, std::vector<VertexId>> parked;
    std::optional<std::array<Edge, 2>> u_pair;

    auto fail = [&](const std::string& what) -> internal_error {
        return internal_error("lemma construction: " + what + "; peel trace:" + format_steps(out.steps));
    };

    for (BlockIndex b : out.order.sequence) {
        const Block& block = out.blocks.blocks[b];
        const VertexId parent = out.order.parent_cut_vertex[b];
        PeelStep step{PeelStep::Kind::root_cycle, b, parent, {}, {}, {}};

        if (block.kind == BlockKind::bridge) {
            if (parent == kNoVertex) {
                throw fail("root block is a bridge");
            }
            step.kind = PeelStep::Kind::bridge_deferred;
            parked[parent].push_back(block.vertices[0] == parent ? block.vertices[1] : block.vertices[0]);
            out.steps.push_back(std::move(step));
            continue;
        }

        const VertexId anchor = parent != kNoVertex ? parent : (root_vertex ? *root_vertex : block.vertices.front());
        Subgraph sub = induced_subgraph(gp, block.vertices);
        CycleWitness witness = constrained_hamiltonian_cycle(sub.graph, sub.from_host[anchor], std::nullopt,
                                                             options.cycle_budget);
        std::vector<VertexId> cycle;
        for (VertexId v : witness.cycle) {
            cycle.push_back(sub.to_host[v]);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            step.cycle.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        const VertexId vk = cycle[1];
        const Edge f1(anchor, vk);
        const Edge f2(anchor, cycle.back());
        for (const Edge& e : step.cycle) {
            if (e != f1) {
                draft.add(e);
            }
        }

        if (parent == kNoVertex) {
            draft.add(f1);
            if (root_vertex) {
                u_pair = {f1, f2};
            }
        } else if (auto it = designated.find(parent); it == designated.end()) {
            auto& leaves = parked[parent];
            if (!leaves.empty()) {
                step.kind = PeelStep::Kind::leaf_path;
                step.removed.push_back(f1);
                VertexId prev = parent;
                for (VertexId l : leaves) {
                    step.added.emplace_back(prev, l);
                    prev = l;
                }
                step.added.emplace_back(prev, vk);
                for (const Edge& e : step.added) {
                    draft.add(e);
                }
                designated[parent] = {Edge(parent, leaves.front()), f2};
                leaves.clear();
            } else {
                step.kind = PeelStep::Kind::disjoint_union;
                draft.add(f1);
                designated[parent] = {f1, f2};
            }
        } else {
            step.kind = PeelStep::Kind::swap;
            const auto [drop, keep] = it->second;
            const VertexId w = drop.other(parent);
            step.removed = {f1, drop};
            step.added = {Edge(w, vk)};
            draft.remove(drop);
            draft.add(Edge(w, vk));
            it->second = {keep, f2};
        }
        out.steps.push_back(std::move(step));
    }
    for (const auto& [cut, leaves] : parked) {
        if (!leaves.empty()) {
            throw fail("leaf bridges at " + std::to_string(gp.label(cut)) + " were never attached");
        }
    }

    // Lift to host ids and close a cycle through the leaves of every trivial cut vertex.
    std::vector<Edge> edges;
    for (const Edge& e : draft.edges()) {
        edges.push_back(out.stripped.edge_to_host(e));
    }
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    FactorCertificate& cert = out.certificate;
    cert.kind = FactorCertificate::Kind::lemma;
    cert.host = g;
    for (const auto& [y, leaves] : cls.leaf_sets) {
        if (leaves.size() < 2) {
            throw fail("trivial cut vertex " + std::to_string(g.label(y)) + " has a single leaf");
        }
        if (deg[y] != 2) {
            throw fail("trivial cut vertex " + std::to_string(g.label(y)) + " has factor degree " +
                       std::to_string(deg[y]) + " before its leaf cycle");
        }
        std::vector<Edge> leaf_cycle;
        VertexId prev = y;
        for (VertexId l : leaves) {
            leaf_cycle.emplace_back(prev, l);
            prev = l;
        }
        leaf_cycle.emplace_back(prev, y);
        edges.insert(edges.end(), leaf_cycle.begin(), leaf_cycle.end());
        cert.cuts.push_back({y, {Edge(y, leaves.front()), Edge(y, leaves.back())}});
        out.leaf_cycles.push_back(std::move(leaf_cycle));
    }
    for (const auto& [cut, pair] : designated) {
        cert.cuts.push_back({out.stripped.to_host[cut],
                             {out.stripped.edge_to_host(pair[0]), out.stripped.edge_to_host(pair[1])}});
    }
    std::sort(cert.cuts.begin(), cert.cuts.end());
    if (u_pair) {
        cert.u = Designation{*u, {out.stripped.edge_to_host((*u_pair)[0]), out.stripped.edge_to_host((*u_pair)[1])}};
    }
    try {
        require_factor_degrees(g, edges, "lemma construction");
    } catch (const internal_error& ex) {
        throw fail(ex.what());
    }
    cert.edges = tag_edges(g, edges);
    return out;
}

TheoremConstruction build_factor_traced(const Graph& g, const BuildOptions& options) {
    if (!is_connected(g)) {
        throw argument_error("factor construction needs a connected graph");
    }
    if (g.vertex_count() < 3) {
        throw unmet_hypotheses("theorem", {{ViolationKind::degenerate_graph, {}, std::nullopt}}, g);
    }
    const StructureClassification cls = classify(g);
    if (auto violations = check_theorem_preconditions(g, cls); !violations.empty()) {
        throw unmet_hypotheses("theorem", std::move(violations), g);
    }

    TheoremConstruction out;
    out.certificate.kind = FactorCertificate::Kind::theorem;
    out.certificate.host = g;

    if (VertexId center = star_center(g); center != kNoVertex && g.vertex_count() <= 4) {
        // The square is complete, so centre, leaves in order, centre is a Hamiltonian cycle.
        std::vector<Edge> edges;
        VertexId prev = center;
        for (VertexId l : g.neighbors(center)) {
            edges.emplace_back(prev, l);
            prev = l;
        }
        edges.emplace_back(prev, center);
        out.certificate.edges = tag_edges(g, edges);
        return out;
    }

    Subgraph stripped = strip(g, cls.bad_leaves);
    try {
        out.lemma = lemma_factor_traced(stripped.graph, std::nullopt, options);
    } catch (const unmet_hypotheses& ex) {
        throw internal_error(std::string("graph without its bad leaves fails the lemma hypotheses: ") + ex.what());
    }
    const FactorCertificate& f_prime = out.lemma->certificate;
    out.plan = plan_bad_leaves(g, stripped, f_prime);

    FactorDraft draft(g.vertex_count());
    for (const TaggedEdge& te : f_prime.edges) {
        draft.add(stripped.edge_to_host(te.edge));
    }
    const Graph sq = square(g);
    try {
        for (const Edge& e : out.plan.removals()) {
            draft.remove(e);
        }
        for (const Edge& e : out.plan.additions()) {
            if (!sq.has_edge(e.u, e.v)) {
                throw internal_error("planned edge " + std::to_string(g.label(e.u)) + "-" +
                                     std::to_string(g.label(e.v)) + " is not in the square");
            }
            draft.add(e);
        }
        require_factor_degrees(g, draft.edges(), "bad-leaf extension");
    } catch (const internal_error& ex) {
        throw internal_error(std::string(ex.what()) + "\nplan:\n" + out.plan.describe(g));
    }
    out.certificate.edges = tag_edges(g, draft.edges());
    return out;
}

}  // namespace sqfactor
