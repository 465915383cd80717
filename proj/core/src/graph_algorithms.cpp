#include <algorithm>
#include <queue>
#include <string>

#include "sqfactor/errors.hpp"
#include "sqfactor/graph.hpp"

namespace sqfactor {

namespace {

void require_vertex(const Graph& g, VertexId v) {
    if (!g.has_vertex(v)) {
        throw argument_error("unknown vertex id " + std::to_string(v));
    }
}

/// Iterative Hopcroft-Tarjan lowpoint DFS over all components.
struct LowpointDfs {
    std::vector<std::size_t> discovery;
    std::vector<std::size_t> low;
    std::vector<VertexId> parent;
    std::vector<std::size_t> tree_children;

    explicit LowpointDfs(const Graph& g)
        : discovery(g.vertex_count(), kUnreachable),
          low(g.vertex_count(), 0),
          parent(g.vertex_count(), kNoVertex),
          tree_children(g.vertex_count(), 0) {
        std::size_t clock = 0;
        std::vector<std::pair<VertexId, std::size_t>> stack;
        for (VertexId root = 0; root < g.vertex_count(); ++root) {
            if (discovery[root] != kUnreachable) {
                continue;
            }
            discovery[root] = low[root] = clock++;
            stack.emplace_back(root, 0);
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                auto nbrs = g.neighbors(v);
                if (next < nbrs.size()) {
                    VertexId w = nbrs[next++];
                    if (discovery[w] == kUnreachable) {
                        parent[w] = v;
                        ++tree_children[v];
                        discovery[w] = low[w] = clock++;
                        stack.emplace_back(w, 0);
                    } else if (w != parent[v]) {
                        low[v] = std::min(low[v], discovery[w]);
                    }
                } else {
                    VertexId done = v;
                    stack.pop_back();
                    if (VertexId p = parent[done]; p != kNoVertex) {
                        low[p] = std::min(low[p], low[done]);
                    }
                }
            }
        }
    }
};

}  // namespace

Graph square(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    std::vector<VertexId> stamp(n, kNoVertex);
    for (VertexId u = 0; u < n; ++u) {
        stamp[u] = u;
        auto visit = [&](VertexId w) {
            if (stamp[w] != u) {
                stamp[w] = u;
                if (u < w) {
                    edges.emplace_back(u, w);
                }
            }
        };
        for (VertexId v : g.neighbors(u)) {
            visit(v);
            for (VertexId w : g.neighbors(v)) {
                visit(w);
            }
        }
    }
    return Graph::from_edges(n, edges, g.labels());
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    require_vertex(g, source);
    std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

std::size_t distance(const Graph& g, VertexId u, VertexId v) {
    require_vertex(g, v);
    return bfs_distances(g, u)[v];
}

std::size_t component_count(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> stack;
    std::size_t count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) {
            continue;
        }
        ++count;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::vector<Edge> bridges(const Graph& g) {
    LowpointDfs dfs(g);
    std::vector<Edge> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexId p = dfs.parent[v];
        if (p != kNoVertex && dfs.low[v] > dfs.discovery[p]) {
            out.emplace_back(p, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> articulation_points(const Graph& g) {
    LowpointDfs dfs(g);
    std::vector<bool> is_cut(g.vertex_count(), false);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexId p = dfs.parent[v];
        if (p == kNoVertex) {
            is_cut[v] = dfs.tree_children[v] >= 2;
        } else if (dfs.parent[p] != kNoVertex && dfs.low[v] >= dfs.discovery[p]) {
            is_cut[p] = true;
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (is_cut[v]) {
            out.push_back(v);
        }
    }
    return out;
}

bool is_biconnected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && articulation_points(g).empty();
}

bool is_two_edge_connected(const Graph& g) {
    return g.vertex_count() >= 2 && is_connected(g) && bridges(g).empty();
}

bool is_essentially_two_edge_connected(const Graph& g) {
    if (!is_connected(g)) {
        throw argument_error("essential edge connectivity is defined for connected graphs only");
    }
    // Removing a cut-edge uv splits off the side of u and the side of v; a side is trivial
    // exactly when it is a single vertex, i.e. when that endpoint has degree 1.
    for (const Edge& e : bridges(g)) {
        if (g.degree(e.u) > 1 && g.degree(e.v) > 1) {
            return false;
        }
    }
    return true;
}

Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
    if (keep.size() != g.vertex_count()) {
        throw argument_error("keep mask size does not match vertex count");
    }
    Subgraph sub;
    sub.from_host.assign(g.vertex_count(), kNoVertex);
    std::vector<std::uint64_t> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (keep[v]) {
            sub.from_host[v] = static_cast<VertexId>(sub.to_host.size());
            sub.to_host.push_back(v);
            labels.push_back(g.label(v));
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (keep[e.u] && keep[e.v]) {
            edges.emplace_back(sub.from_host[e.u], sub.from_host[e.v]);
        }
    }
    sub.graph = Graph::from_edges(sub.to_host.size(), edges, std::move(labels));
    return sub;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (VertexId v : vertices) {
        require_vertex(g, v);
        keep[v] = true;
    }
    return induced_subgraph(g, keep);
}

}  // namespace sqfactor
