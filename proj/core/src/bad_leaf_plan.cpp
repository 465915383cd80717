#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sqfactor/factor_builder.hpp"

namespace sqfactor {

std::vector<Edge> BadLeafPlan::additions() const {
    std::vector<Edge> out;
    for (const auto* part : {&clique_matchings, &add_on_factor, &add_noncut, &add_cut}) {
        out.insert(out.end(), part->begin(), part->end());
    }
    return out;
}

std::vector<Edge> BadLeafPlan::removals() const {
    std::vector<Edge> out = drop_on_factor;
    out.insert(out.end(), drop_cut.begin(), drop_cut.end());
    return out;
}

std::string BadLeafPlan::describe(const Graph& g) const {
    std::ostringstream out;
    auto label = [&](VertexId v) { return g.label(v); };
    out << "bad leaves:";
    for (VertexId x : bad_leaves) {
        out << ' ' << label(x);
    }
    out << "\ncliques:";
    for (const auto& clique : cliques) {
        out << " {";
        for (VertexId y : clique) {
            out << ' ' << label(y);
        }
        out << " }";
    }
    auto records = [&](const char* name, const std::vector<BadLeafRecord>& list) {
        out << '\n' << name << ':';
        for (const BadLeafRecord& r : list) {
            out << " (x=" << label(r.x) << " y=" << label(r.y) << " z=" << label(r.z);
            if (r.z_prime != kNoVertex) {
                out << " z'=" << label(r.z_prime);
            }
            out << ')';
        }
    };
    records("on factor edge", on_factor_edge);
    records("to non-cut", to_noncut);
    records("to cut", to_cut);
    return out.str();
}

namespace {

/// Kuhn augmenting-path assignment of a distinct edge z-z' to every record.
class RerouteMatching {
public:
    explicit RerouteMatching(std::vector<std::vector<Edge>> candidates)
        : candidates_(std::move(candidates)), chosen_(candidates_.size()) {}

    bool solve() {
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            std::set<Edge> visited;
            if (!augment(i, visited)) {
                return false;
            }
        }
        return true;
    }

    const Edge& chosen(std::size_t i) const { return chosen_[i]; }

private:
    bool augment(std::size_t i, std::set<Edge>& visited) {
        for (const Edge& e : candidates_[i]) {
            if (!visited.insert(e).second) {
                continue;
            }
            auto owner = owner_.find(e);
            if (owner == owner_.end() || augment(owner->second, visited)) {
                owner_[e] = i;
                chosen_[i] = e;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<Edge>> candidates_;
    std::vector<Edge> chosen_;
    std::map<Edge, std::size_t> owner_;
};

}  // namespace

BadLeafPlan plan_bad_leaves(const Graph& g, const Subgraph& stripped, const FactorCertificate& f_prime) {
    BadLeafPlan plan;
    const StructureClassification cls = classify(g);
    plan.bad_leaves = cls.bad_leaves;
    if (plan.bad_leaves.empty()) {
        return plan;
    }

    const Graph& gp = stripped.graph;
    const std::size_t n = g.vertex_count();

    // F' in host ids, as adjacency sets.
    std::vector<std::set<VertexId>> factor(n);
    for (const TaggedEdge& te : f_prime.edges) {
        Edge e = stripped.edge_to_host(te.edge);
        factor[e.u].insert(e.v);
        factor[e.v].insert(e.u);
    }
    auto in_factor = [&](VertexId a, VertexId b) { return factor[a].contains(b); };

    std::vector<bool> is_cut_in_stripped(n, false);
    for (VertexId v : decompose(gp).cut_vertices) {
        is_cut_in_stripped[stripped.to_host[v]] = true;
    }

    std::vector<VertexId> neighbour_of(n, kNoVertex);
    std::vector<bool> is_y(n, false);
    for (VertexId x : plan.bad_leaves) {
        VertexId y = g.neighbors(x).front();
        neighbour_of[x] = y;
        is_y[y] = true;
        if (factor[y].size() != 2) {
            throw internal_error("neighbour " + std::to_string(g.label(y)) + " of a bad leaf has factor degree " +
                                 std::to_string(factor[y].size()) + ", expected 2");
        }
    }

    std::vector<bool> paired(n, false);
    for (VertexId x : plan.bad_leaves) {
        auto dist = bfs_distances(g, x);
        for (VertexId other : plan.bad_leaves) {
            if (other != x && dist[other] == 3) {
                paired[x] = true;
            }
        }
    }

    // Cliques: components of the graph induced by the neighbours of paired bad leaves.
    std::vector<VertexId> leaf_at(n, kNoVertex);
    for (VertexId x : plan.bad_leaves) {
        if (paired[x]) {
            plan.paired_leaves.push_back(x);
            leaf_at[neighbour_of[x]] = x;
        }
    }
    std::vector<bool> assigned(n, false);
    for (VertexId x : plan.paired_leaves) {
        VertexId start = neighbour_of[x];
        if (assigned[start]) {
            continue;
        }
        std::vector<VertexId> clique{start};
        assigned[start] = true;
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (VertexId w : g.neighbors(clique[i])) {
                if (leaf_at[w] != kNoVertex && !assigned[w]) {
                    assigned[w] = true;
                    clique.push_back(w);
                }
            }
        }
        std::sort(clique.begin(), clique.end());
        if (clique.size() < 2) {
            throw internal_error("paired bad leaf " + std::to_string(g.label(x)) + " has no partner clique");
        }
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                if (!g.has_edge(clique[i], clique[j])) {
                    throw internal_error("neighbours of paired bad leaves do not induce a complete graph (" +
                                         std::to_string(g.label(clique[i])) + ", " +
                                         std::to_string(g.label(clique[j])) + ")");
                }
            }
        }
        std::vector<VertexId> xs;
        for (VertexId y : clique) {
            xs.push_back(leaf_at[y]);
        }
        const std::size_t t = clique.size();
        for (std::size_t j = 0; j + 1 < t; ++j) {
            plan.clique_matchings.emplace_back(xs[j], clique[j + 1]);
            plan.clique_matchings.emplace_back(xs[j + 1], clique[j]);
        }
        plan.clique_matchings.emplace_back(xs.front(), clique.front());
        plan.clique_matchings.emplace_back(xs.back(), clique.back());
        plan.cliques.push_back(std::move(clique));
        plan.clique_leaves.push_back(std::move(xs));
    }
    std::sort(plan.cliques.begin(), plan.cliques.end());
    std::sort(plan.clique_leaves.begin(), plan.clique_leaves.end(),
              [&](const auto& a, const auto& b) { return neighbour_of[a.front()] < neighbour_of[b.front()]; });

    std::set<VertexId> used_z;
    auto claim_z = [&](VertexId z) {
        if (!used_z.insert(z).second) {
            throw internal_error("two bad leaves share re-attachment vertex " + std::to_string(g.label(z)));
        }
        if (is_y[z]) {
            throw internal_error("re-attachment vertex " + std::to_string(g.label(z)) + " is next to a bad leaf");
        }
    };

    for (VertexId x : plan.bad_leaves) {
        if (paired[x]) {
            continue;
        }
        const VertexId y = neighbour_of[x];
        BadLeafRecord record{x, y, kNoVertex, kNoVertex};

        for (VertexId z : factor[y]) {
            if (g.has_edge(y, z)) {
                record.z = z;
                break;
            }
        }
        if (record.z != kNoVertex) {
            claim_z(record.z);
            plan.on_factor_edge.push_back(record);
            continue;
        }

        VertexId smallest_noncut = kNoVertex;
        VertexId smallest_cut = kNoVertex;
        for (VertexId w : g.neighbors(y)) {
            if (w == x) {
                continue;
            }
            VertexId& slot = is_cut_in_stripped[w] ? smallest_cut : smallest_noncut;
            slot = std::min(slot, w);
        }
        if (smallest_noncut != kNoVertex) {
            record.z = smallest_noncut;
            claim_z(record.z);
            if (factor[record.z].size() != 2) {
                throw internal_error("non-cut vertex " + std::to_string(g.label(record.z)) + " has factor degree " +
                                     std::to_string(factor[record.z].size()));
            }
            plan.to_noncut.push_back(record);
        } else if (smallest_cut != kNoVertex) {
            record.z = smallest_cut;
            claim_z(record.z);
            if (factor[record.z].size() != 4) {
                throw internal_error("cut vertex " + std::to_string(g.label(record.z)) + " has factor degree " +
                                     std::to_string(factor[record.z].size()));
            }
            plan.to_cut.push_back(record);
        } else {
            throw internal_error("bad leaf neighbour " + std::to_string(g.label(y)) + " has no other neighbour");
        }
    }

    // Each third-case record re-routes a distinct original factor edge z-z' through y.
    std::vector<std::vector<Edge>> candidates;
    for (const BadLeafRecord& r : plan.to_cut) {
        std::vector<Edge> options;
        for (VertexId w : factor[r.z]) {
            if (g.has_edge(r.z, w) && !in_factor(r.y, w)) {
                options.emplace_back(r.z, w);
            }
        }
        candidates.push_back(std::move(options));
    }
    RerouteMatching matching(std::move(candidates));
    if (!matching.solve()) {
        throw internal_error("no edge-disjoint choice of re-routed edges for the cut-vertex case");
    }
    for (std::size_t i = 0; i < plan.to_cut.size(); ++i) {
        plan.to_cut[i].z_prime = matching.chosen(i).other(plan.to_cut[i].z);
    }

    for (const BadLeafRecord& r : plan.on_factor_edge) {
        plan.add_on_factor.emplace_back(r.x, r.y);
        plan.add_on_factor.emplace_back(r.x, r.z);
        plan.drop_on_factor.emplace_back(r.y, r.z);
    }
    for (const BadLeafRecord& r : plan.to_noncut) {
        plan.add_noncut.emplace_back(r.x, r.y);
        plan.add_noncut.emplace_back(r.x, r.z);
        plan.add_noncut.emplace_back(r.y, r.z);
    }
    for (const BadLeafRecord& r : plan.to_cut) {
        plan.add_cut.emplace_back(r.x, r.y);
        plan.add_cut.emplace_back(r.x, r.z);
        plan.add_cut.emplace_back(r.y, r.z_prime);
        plan.drop_cut.emplace_back(r.z, r.z_prime);
    }
    return plan;
}

}  // namespace sqfactor
