#include "sqfactor/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sqfactor/errors.hpp"

namespace sqfactor::corpus {

namespace {

struct Builder {
    std::size_t n = 0;
    std::set<Edge> edges;

    VertexId add_vertex() { return static_cast<VertexId>(n++); }
    bool add_edge(VertexId a, VertexId b) { return a != b && edges.insert(Edge(a, b)).second; }
    bool has_edge(VertexId a, VertexId b) const { return edges.contains(Edge(a, b)); }

    Graph build() const {
        std::vector<Edge> list(edges.begin(), edges.end());
        return Graph::from_edges(n, list);
    }

    /// Graph with vertex ids shuffled so structure does not follow construction order.
    Graph build_shuffled(Rng& rng) const {
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), VertexId{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (const Edge& e : edges) {
            list.emplace_back(perm[e.u], perm[e.v]);
        }
        return Graph::from_edges(n, list);
    }
};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Adds a 2-connected block on `size` vertices to b, reusing `anchor` as one of them
/// (kNoVertex for a fresh block). Returns the block's vertices.
std::vector<VertexId> add_biconnected(Builder& b, Rng& rng, std::size_t size, std::size_t chords, VertexId anchor) {
    std::vector<VertexId> vs;
    vs.push_back(anchor == kNoVertex ? b.add_vertex() : anchor);
    const std::size_t cycle_len = uniform(rng, 3, size);
    for (std::size_t i = 1; i < cycle_len; ++i) {
        vs.push_back(b.add_vertex());
    }
    for (std::size_t i = 0; i < cycle_len; ++i) {
        b.add_edge(vs[i], vs[(i + 1) % cycle_len]);
    }
    while (vs.size() < size) {
        const std::size_t internal = uniform(rng, 1, size - vs.size());
        const VertexId from = vs[uniform(rng, 0, vs.size() - 1)];
        VertexId to = from;
        while (to == from) {
            to = vs[uniform(rng, 0, vs.size() - 1)];
        }
        VertexId prev = from;
        for (std::size_t i = 0; i < internal; ++i) {
            const VertexId v = b.add_vertex();
            b.add_edge(prev, v);
            vs.push_back(v);
            prev = v;
        }
        b.add_edge(prev, to);
    }
    for (std::size_t i = 0; i < chords; ++i) {
        b.add_edge(vs[uniform(rng, 0, vs.size() - 1)], vs[uniform(rng, 0, vs.size() - 1)]);
    }
    return vs;
}

std::size_t random_chords(Rng& rng, std::size_t size) {
    return coin(rng, 0.4) ? 0 : uniform(rng, 0, size);
}

/// Block tree into b; returns the core vertex count.
void grow_block_tree(Builder& b, Rng& rng, std::size_t target_n) {
    target_n = std::max<std::size_t>(target_n, 3);
    const std::size_t first = uniform(rng, 3, std::min<std::size_t>(target_n, 8));
    add_biconnected(b, rng, first, random_chords(rng, first), kNoVertex);
    while (b.n + 2 <= target_n) {
        const std::size_t size = uniform(rng, 3, std::min<std::size_t>(10, target_n - b.n + 1));
        const auto anchor = static_cast<VertexId>(uniform(rng, 0, b.n - 1));
        add_biconnected(b, rng, size, random_chords(rng, size), anchor);
    }
}

/// Attaches leaves to core vertices; leaves at non-cut vertices come in groups of at least two.
/// Returns, per core vertex, how many leaves it received.
std::vector<std::size_t> decorate(Builder& b, Rng& rng, std::size_t core_n, const std::vector<bool>& core_cut,
                                  std::size_t max_n) {
    std::vector<std::size_t> added(core_n, 0);
    std::vector<VertexId> order(core_n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (VertexId v : order) {
        if (!coin(rng, 0.3)) {
            continue;
        }
        const std::size_t want = core_cut[v] ? uniform(rng, 1, 3) : uniform(rng, 2, 4);
        const std::size_t minimum = core_cut[v] ? 1 : 2;
        const std::size_t room = max_n - b.n;
        const std::size_t count = std::min(want, room);
        if (count < minimum) {
            continue;
        }
        for (std::size_t i = 0; i < count; ++i) {
            b.add_edge(v, b.add_vertex());
        }
        added[v] = count;
    }
    return added;
}

std::vector<bool> cut_mask(const Graph& g) {
    std::vector<bool> mask(g.vertex_count(), false);
    for (VertexId v : articulation_points(g)) {
        mask[v] = true;
    }
    return mask;
}

Graph star(Rng& rng, std::size_t max_n) {
    const std::size_t s = uniform(rng, 4, std::max<std::size_t>(4, std::min<std::size_t>(max_n - 1, 10)));
    Builder b;
    const VertexId c = b.add_vertex();
    for (std::size_t i = 0; i < s; ++i) {
        b.add_edge(c, b.add_vertex());
    }
    return b.build_shuffled(rng);
}

}  // namespace

Graph random_biconnected(Rng& rng, std::size_t n, std::size_t chords) {
    if (n < 3) {
        throw argument_error("a 2-connected graph needs at least 3 vertices");
    }
    Builder b;
    add_biconnected(b, rng, n, chords, kNoVertex);
    return b.build_shuffled(rng);
}

Graph random_block_tree(Rng& rng, std::size_t target_n) {
    Builder b;
    grow_block_tree(b, rng, target_n);
    return b.build_shuffled(rng);
}

Graph random_lemma_graph(Rng& rng, std::size_t max_n) {
    if (max_n < 5) {
        throw argument_error("max_n must be at least 5");
    }
    if (coin(rng, 0.05)) {
        return star(rng, max_n);
    }
    Builder b;
    grow_block_tree(b, rng, uniform(rng, 3, std::max<std::size_t>(3, max_n * 3 / 5)));
    const std::size_t core_n = b.n;
    const std::vector<bool> cut = cut_mask(b.build());
    decorate(b, rng, core_n, cut, max_n);
    return b.build_shuffled(rng);
}

Graph random_theorem_graph(Rng& rng, std::size_t max_n) {
    if (max_n < 5) {
        throw argument_error("max_n must be at least 5");
    }
    Builder b;
    grow_block_tree(b, rng, uniform(rng, 3, std::max<std::size_t>(3, max_n / 2)));
    const std::size_t core_n = b.n;
    const Graph core = b.build();
    const std::vector<bool> cut = cut_mask(core);
    const std::size_t reserve = uniform(rng, 1, std::max<std::size_t>(1, (max_n - core_n) / 2));
    const std::vector<std::size_t> added = decorate(b, rng, core_n, cut, max_n - reserve);

    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < core_n; ++v) {
        if (!cut[v] && added[v] == 0) {
            candidates.push_back(v);
        }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<std::vector<std::size_t>> dist(core_n);
    std::vector<VertexId> hosts;
    std::vector<bool> used(core_n, false);
    const auto acceptable = [&](VertexId y) {
        if (dist[y].empty()) {
            dist[y] = bfs_distances(core, y);
        }
        return std::none_of(hosts.begin(), hosts.end(), [&](VertexId h) { return dist[y][h] == 2; });
    };
    const auto take = [&](VertexId y) {
        hosts.push_back(y);
        used[y] = true;
        b.add_edge(y, b.add_vertex());
    };
    for (VertexId y : candidates) {
        if (b.n >= max_n) {
            break;
        }
        if (used[y] || !acceptable(y)) {
            continue;
        }
        take(y);
        // prefer neighbours of a new host so adjacent bad-leaf groups show up often
        if (coin(rng, 0.6)) {
            for (VertexId z : core.neighbors(y)) {
                if (b.n < max_n && !used[z] && std::find(candidates.begin(), candidates.end(), z) != candidates.end() &&
                    acceptable(z)) {
                    take(z);
                }
            }
        }
    }
    return b.build_shuffled(rng);
}

std::vector<std::uint64_t> canonical_key(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 64) {
        throw argument_error("canonical_key supports at most 64 vertices");
    }
    // colour refinement to an equitable ordered partition
    std::vector<std::size_t> colour(n);
    for (VertexId v = 0; v < n; ++v) {
        colour[v] = g.degree(v);
    }
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<std::size_t>, VertexId>> sig(n);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<std::size_t> s{colour[v]};
            for (VertexId w : g.neighbors(v)) {
                s.push_back(colour[w]);
            }
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<std::size_t>, std::size_t> rank;
        for (const auto& [s, v] : sig) {
            rank.emplace(s, 0);
        }
        std::size_t r = 0;
        for (auto& [s, value] : rank) {
            value = r++;
        }
        for (const auto& [s, v] : sig) {
            colour[v] = rank[s];
        }
        if (rank.size() == classes) {
            break;
        }
        classes = rank.size();
    }
    std::vector<std::vector<VertexId>> cells(classes);
    for (VertexId v = 0; v < n; ++v) {
        cells[colour[v]].push_back(v);
    }

    std::vector<std::uint64_t> adj(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId w : g.neighbors(v)) {
            adj[v] |= std::uint64_t{1} << w;
        }
    }
    std::vector<std::uint64_t> best;
    std::vector<VertexId> order;  // position -> vertex
    order.reserve(n);
    for (auto& cell : cells) {
        std::sort(cell.begin(), cell.end());
    }
    // try every ordering consistent with the partition; cells permute independently
    std::vector<std::vector<VertexId>> current = cells;
    const auto evaluate = [&] {
        order.clear();
        for (const auto& cell : current) {
            order.insert(order.end(), cell.begin(), cell.end());
        }
        std::vector<VertexId> pos(n);
        for (std::size_t i = 0; i < n; ++i) {
            pos[order[i]] = static_cast<VertexId>(i);
        }
        std::vector<std::uint64_t> key(n + 1, 0);
        key[0] = n;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t row = 0;
            for (VertexId w : g.neighbors(order[i])) {
                row |= std::uint64_t{1} << pos[w];
            }
            key[i + 1] = row;
        }
        if (best.empty() || key < best) {
            best = std::move(key);
        }
    };
    const auto recurse = [&](auto&& self, std::size_t cell) -> void {
        if (cell == current.size()) {
            evaluate();
            return;
        }
        std::sort(current[cell].begin(), current[cell].end());
        do {
            self(self, cell + 1);
        } while (std::next_permutation(current[cell].begin(), current[cell].end()));
    };
    recurse(recurse, 0);
    if (best.empty()) {
        best.push_back(0);
    }
    return best;
}

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n == 0) {
        return {};
    }
    std::vector<Graph> level{Graph::from_edges(1, std::span<const Edge>{})};
    for (std::size_t size = 2; size <= n; ++size) {
        std::set<std::vector<std::uint64_t>> seen;
        std::vector<Graph> next;
        const auto fresh = static_cast<VertexId>(size - 1);
        for (const Graph& base : level) {
            const std::vector<Edge> base_edges = base.edges();
            for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (size - 1)); ++subset) {
                std::vector<Edge> edges = base_edges;
                for (VertexId v = 0; v < fresh; ++v) {
                    if (subset >> v & 1U) {
                        edges.emplace_back(v, fresh);
                    }
                }
                Graph g = Graph::from_edges(size, edges);
                if (seen.insert(canonical_key(g)).second) {
                    next.push_back(std::move(g));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace sqfactor::corpus
