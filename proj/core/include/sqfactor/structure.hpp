#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sqfactor/graph.hpp"

namespace sqfactor {

using BlockIndex = std::size_t;

enum class BlockKind { bridge, cyclic };

struct Block {
    std::vector<VertexId> vertices;  ///< ascending
    std::vector<Edge> edges;         ///< canonical order
    BlockKind kind = BlockKind::bridge;

    bool contains(VertexId v) const;
};

/// Blocks and cut vertices of a connected graph, plus the bipartite block/cut-vertex incidence.
struct BlockCutTree {
    std::vector<Block> blocks;                          ///< sorted by (smallest vertex, vertex list)
    std::vector<VertexId> cut_vertices;                 ///< ascending
    std::vector<std::vector<BlockIndex>> blocks_of;     ///< per host vertex, ascending

    bool is_cut_vertex(VertexId v) const { return blocks_of[v].size() >= 2; }
    std::vector<VertexId> cut_vertices_of(BlockIndex b) const;
};

BlockCutTree decompose(const Graph& g);

struct StructureClassification {
    std::vector<VertexId> leaves;
    std::vector<VertexId> bad_leaves;
    std::vector<VertexId> trivial_cut_vertices;
    std::vector<VertexId> nontrivial_cut_vertices;
    std::vector<Edge> trivial_bridges;     ///< cut-edges with a leaf endpoint; includes the bad ones
    std::vector<Edge> bad_bridges;         ///< trivial bridges at a bad leaf
    std::vector<Edge> nontrivial_bridges;  ///< cut-edges without a leaf endpoint
    /// Trivial cut vertex -> its adjacent leaves.
    std::map<VertexId, std::vector<VertexId>> leaf_sets;

    bool is_bad_leaf(VertexId v) const;
    bool is_trivial_cut_vertex(VertexId v) const;
};

StructureClassification classify(const Graph& g, const BlockCutTree& bct);
inline StructureClassification classify(const Graph& g) { return classify(g, decompose(g)); }

/// Removes pairwise non-adjacent leaves. Throws argument_error if a listed vertex is not a leaf
/// or two listed vertices are adjacent.
Subgraph strip(const Graph& g, const std::vector<VertexId>& removal);

/// Breadth-first block order rooted at a cyclic block.
///
/// Children of each cut vertex form one consecutive run, bridge children first (by their other
/// endpoint), then cyclic children (by smallest vertex). Runs on the same tree level are ordered
/// by the smallest vertex they contain.
struct BlockOrdering {
    std::optional<BlockIndex> root;
    std::vector<BlockIndex> sequence;
    std::vector<VertexId> parent_cut_vertex;  ///< per block; kNoVertex for the root
    std::vector<std::size_t> depth;           ///< per block: number of blocks on the tree path from the root, root = 0

    /// Children of `cut` in sequence order.
    std::vector<BlockIndex> children_of(VertexId cut) const;
};

/// Throws precondition_error when the graph has edges but no cyclic block, and argument_error when
/// `preferred_root_vertex` is not in a cyclic block.
BlockOrdering order_blocks(const Graph& g, const BlockCutTree& bct,
                           std::optional<VertexId> preferred_root_vertex = std::nullopt);

}  // namespace sqfactor
