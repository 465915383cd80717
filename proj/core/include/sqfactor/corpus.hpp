#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sqfactor/graph.hpp"

/// Seeded graph generators used by property tests, the acceptance suite and the CLI.
namespace sqfactor::corpus {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eedf00dULL;

/// 2-connected graph on exactly n >= 3 vertices: random cycle plus ears, then `chords` extra edges.
Graph random_biconnected(Rng& rng, std::size_t n, std::size_t chords);

/// Bridgeless connected graph made of cyclic blocks glued at cut vertices, about `target_n` vertices.
Graph random_block_tree(Rng& rng, std::size_t target_n);

/// Graph with no non-trivial bridge and no bad leaf: a block tree decorated with leaves
/// (any number at core cut vertices, at least two elsewhere). Occasionally a star K_{1,s}, s >= 4.
Graph random_lemma_graph(Rng& rng, std::size_t max_n = 40);

/// Lemma graph plus single leaves at non-cut leafless core vertices, placed so that bad leaves
/// are pairwise at distance 3 or at least 5.
Graph random_theorem_graph(Rng& rng, std::size_t max_n = 40);

/// All connected graphs on n vertices up to isomorphism (n <= 9 is practical).
std::vector<Graph> connected_graphs(std::size_t n);

/// Canonical relabelling key: isomorphic graphs get equal keys.
std::vector<std::uint64_t> canonical_key(const Graph& g);

}  // namespace sqfactor::corpus
