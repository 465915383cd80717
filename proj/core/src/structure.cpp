#include "sqfactor/structure.hpp"

#include <algorithm>
#include <string>

#include "sqfactor/errors.hpp"

namespace sqfactor {

bool Block::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<VertexId> BlockCutTree::cut_vertices_of(BlockIndex b) const {
    std::vector<VertexId> out;
    for (VertexId v : blocks[b].vertices) {
        if (is_cut_vertex(v)) {
            out.push_back(v);
        }
    }
    return out;
}

BlockCutTree decompose(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (g.edge_count() == 0) {
        throw argument_error("decompose: graph has no edges");
    }
    if (!is_connected(g)) {
        throw argument_error("decompose: graph is disconnected");
    }

    std::vector<std::size_t> disc(n, kUnreachable);
    std::vector<std::size_t> low(n, 0);
    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<Edge> edge_stack;
    std::vector<std::pair<VertexId, std::size_t>> frames;
    std::vector<std::vector<Edge>> components;
    std::size_t clock = 0;

    const VertexId root = 0;
    disc[root] = low[root] = clock++;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
        auto& [v, next] = frames.back();
        auto nbrs = g.neighbors(v);
        if (next < nbrs.size()) {
            VertexId w = nbrs[next++];
            if (disc[w] == kUnreachable) {
                edge_stack.emplace_back(v, w);
                parent[w] = v;
                disc[w] = low[w] = clock++;
                frames.emplace_back(w, 0);
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        VertexId child = v;
        frames.pop_back();
        VertexId p = parent[child];
        if (p == kNoVertex) {
            continue;
        }
        low[p] = std::min(low[p], low[child]);
        if (low[child] >= disc[p]) {
            std::vector<Edge> component;
            const Edge tree_edge(p, child);
            while (true) {
                Edge e = edge_stack.back();
                edge_stack.pop_back();
                component.push_back(e);
                if (e == tree_edge) {
                    break;
                }
            }
            components.push_back(std::move(component));
        }
    }

    BlockCutTree bct;
    for (auto& component : components) {
        Block block;
        std::sort(component.begin(), component.end());
        for (const Edge& e : component) {
            block.vertices.push_back(e.u);
            block.vertices.push_back(e.v);
        }
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
        block.edges = std::move(component);
        block.kind = block.edges.size() == 1 ? BlockKind::bridge : BlockKind::cyclic;
        bct.blocks.push_back(std::move(block));
    }
    std::sort(bct.blocks.begin(), bct.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

    bct.blocks_of.assign(n, {});
    for (BlockIndex b = 0; b < bct.blocks.size(); ++b) {
        for (VertexId v : bct.blocks[b].vertices) {
            bct.blocks_of[v].push_back(b);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (bct.blocks_of[v].size() >= 2) {
            bct.cut_vertices.push_back(v);
        }
    }
    return bct;
}

bool StructureClassification::is_bad_leaf(VertexId v) const {
    return std::binary_search(bad_leaves.begin(), bad_leaves.end(), v);
}

bool StructureClassification::is_trivial_cut_vertex(VertexId v) const { return leaf_sets.contains(v); }

StructureClassification classify(const Graph& g, const BlockCutTree& bct) {
    StructureClassification cls;
    const std::size_t n = g.vertex_count();
    std::vector<bool> leaf(n, false);
    for (VertexId v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            leaf[v] = true;
            cls.leaves.push_back(v);
        }
    }

    for (VertexId y : bct.cut_vertices) {
        std::vector<VertexId> adjacent_leaves;
        for (VertexId w : g.neighbors(y)) {
            if (leaf[w]) {
                adjacent_leaves.push_back(w);
            }
        }
        bool trivial = false;
        if (!adjacent_leaves.empty()) {
            std::vector<bool> keep(n, true);
            for (VertexId l : adjacent_leaves) {
                keep[l] = false;
            }
            Subgraph rest = induced_subgraph(g, keep);
            auto cuts = articulation_points(rest.graph);
            trivial = !std::binary_search(cuts.begin(), cuts.end(), rest.from_host[y]);
        }
        if (trivial) {
            cls.trivial_cut_vertices.push_back(y);
            if (adjacent_leaves.size() == 1) {
                cls.bad_leaves.push_back(adjacent_leaves.front());
            }
            cls.leaf_sets.emplace(y, std::move(adjacent_leaves));
        } else {
            cls.nontrivial_cut_vertices.push_back(y);
        }
    }
    std::sort(cls.bad_leaves.begin(), cls.bad_leaves.end());

    for (const Edge& e : bridges(g)) {
        if (leaf[e.u] || leaf[e.v]) {
            cls.trivial_bridges.push_back(e);
            if (cls.is_bad_leaf(e.u) || cls.is_bad_leaf(e.v)) {
                cls.bad_bridges.push_back(e);
            }
        } else {
            cls.nontrivial_bridges.push_back(e);
        }
    }
    return cls;
}

Subgraph strip(const Graph& g, const std::vector<VertexId>& removal) {
    std::vector<bool> keep(g.vertex_count(), true);
    for (VertexId v : removal) {
        if (!g.has_vertex(v)) {
            throw argument_error("strip: unknown vertex " + std::to_string(v));
        }
        if (g.degree(v) != 1) {
            throw argument_error("strip: vertex " + std::to_string(g.label(v)) + " is not a leaf");
        }
        keep[v] = false;
    }
    for (VertexId v : removal) {
        if (!keep[g.neighbors(v).front()]) {
            throw argument_error("strip: removed leaves " + std::to_string(g.label(v)) + " and " +
                                 std::to_string(g.label(g.neighbors(v).front())) + " are adjacent");
        }
    }
    return induced_subgraph(g, keep);
}

std::vector<BlockIndex> BlockOrdering::children_of(VertexId cut) const {
    std::vector<BlockIndex> out;
    for (BlockIndex b : sequence) {
        if (parent_cut_vertex[b] == cut) {
            out.push_back(b);
        }
    }
    return out;
}

BlockOrdering order_blocks(const Graph& g, const BlockCutTree& bct, std::optional<VertexId> preferred_root_vertex) {
    BlockOrdering order;
    const std::size_t block_count = bct.blocks.size();
    order.parent_cut_vertex.assign(block_count, kNoVertex);
    order.depth.assign(block_count, 0);
    if (block_count == 0) {
        return order;
    }

    std::optional<BlockIndex> root;
    if (preferred_root_vertex) {
        VertexId u = *preferred_root_vertex;
        if (!g.has_vertex(u)) {
            throw argument_error("order_blocks: unknown root vertex " + std::to_string(u));
        }
        for (BlockIndex b : bct.blocks_of[u]) {
            if (bct.blocks[b].kind == BlockKind::cyclic) {
                root = b;
                break;
            }
        }
        if (!root) {
            throw argument_error("order_blocks: vertex " + std::to_string(g.label(u)) + " lies in no cyclic block");
        }
    } else {
        // Blocks are sorted by vertex list, so the first cyclic one has the smallest vertex among cyclic blocks.
        for (BlockIndex b = 0; b < block_count; ++b) {
            if (bct.blocks[b].kind == BlockKind::cyclic) {
                root = b;
                break;
            }
        }
        if (!root) {
            throw precondition_error("order_blocks: all-bridge graph has no cyclic block to root at");
        }
    }

    order.root = root;
    order.sequence.push_back(*root);
    std::vector<bool> placed(block_count, false);
    placed[*root] = true;

    std::vector<BlockIndex> level{*root};
    std::size_t depth = 0;
    while (!level.empty()) {
        ++depth;
        struct Run {
            VertexId smallest;
            std::vector<BlockIndex> blocks;
        };
        std::vector<Run> runs;
        for (BlockIndex b : level) {
            for (VertexId cut : bct.cut_vertices_of(b)) {
                if (cut == order.parent_cut_vertex[b]) {
                    continue;
                }
                Run run{cut, {}};
                for (BlockIndex child : bct.blocks_of[cut]) {
                    if (!placed[child]) {
                        run.blocks.push_back(child);
                        run.smallest = std::min(run.smallest, bct.blocks[child].vertices.front());
                    }
                }
                auto sort_key = [&](BlockIndex c) {
                    const Block& block = bct.blocks[c];
                    if (block.kind == BlockKind::bridge) {
                        return std::pair{0, block.vertices[0] == cut ? block.vertices[1] : block.vertices[0]};
                    }
                    return std::pair{1, block.vertices.front()};
                };
                std::sort(run.blocks.begin(), run.blocks.end(),
                          [&](BlockIndex a, BlockIndex c) { return sort_key(a) < sort_key(c); });
                for (BlockIndex child : run.blocks) {
                    placed[child] = true;
                    order.parent_cut_vertex[child] = cut;
                    order.depth[child] = depth;
                }
                if (!run.blocks.empty()) {
                    runs.push_back(std::move(run));
                }
            }
        }
        std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.smallest < b.smallest; });
        level.clear();
        for (const Run& run : runs) {
            order.sequence.insert(order.sequence.end(), run.blocks.begin(), run.blocks.end());
            level.insert(level.end(), run.blocks.begin(), run.blocks.end());
        }
    }
    return order;
}

}  // namespace sqfactor
