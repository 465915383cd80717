#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqfactor/graph.hpp"

namespace sqfactor {

/// Resource contract for the exact cycle search.
///
/// Without a node cap the search runs to completion but refuses blocks larger than
/// `max_vertices`. With a node cap any block up to 64 vertices is accepted and the search stops
/// with budget_error once the cap is hit.
struct SearchBudget {
    std::size_t max_vertices = 24;
    std::optional<std::uint64_t> max_nodes;
};

struct CycleWitness {
    std::vector<VertexId> cycle;    ///< starts at v1; cycle[1] and cycle.back() are v1's neighbours
    std::vector<TaggedEdge> edges;  ///< in cycle order, tagged against the block
    std::uint64_t nodes_explored = 0;
};

/// Hamiltonian cycle of square(block) whose two edges at v1 are edges of `block` and, when v2 is
/// given, with at least one edge of `block` at v2; if v2 is next to v1 on the cycle, that edge is
/// not the v1-v2 edge.
///
/// Throws precondition_error if the block is not 2-connected, argument_error for bad v1/v2,
/// budget_error when the budget refuses or runs out, internal_error if the exhausted search finds
/// nothing (cannot happen for a 2-connected block).
CycleWitness constrained_hamiltonian_cycle(const Graph& block, VertexId v1, std::optional<VertexId> v2 = std::nullopt,
                                           const SearchBudget& budget = {});

}  // namespace sqfactor
