#pragma once

// Small named graphs shared by the test files.

#include <initializer_list>
#include <vector>

#include "sqfactor/graph.hpp"

namespace fixtures {

using sqfactor::Edge;
using sqfactor::Graph;
using sqfactor::VertexId;

inline Graph make(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) {
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    }
    return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            edges.emplace_back(a, b);
        }
    }
    return Graph::from_edges(n, edges);
}

/// K_{1,s} with centre 0.
inline Graph star(std::size_t s) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= s; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph::from_edges(s + 1, edges);
}

/// Triangles 0-1-2 and 2-3-4 sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

/// Triangle a=0, b=1, c=2 with pendant x=3 at a.
inline Graph triangle_pendant() { return make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

/// Vertex names for the block-structure example with one bad leaf and one non-trivial bridge.
namespace bridged_blocks {
inline constexpr VertexId c1 = 0, c2 = 1, c3 = 2, w = 3, x = 4, y_1 = 5, y_2 = 6, z = 7, p = 8, q = 9, c4 = 10,
                          r = 11, t = 12;
}

/// 4-cycle c1-c2-c3-w; pendant x at c1; y_1, y_2 at c2; z at c3; bridge c3-p; triangles p-q-c4, c4-r-t.
inline Graph bridged_blocks_graph() {
    using namespace bridged_blocks;
    return make(13, {{c1, c2}, {c2, c3}, {c3, w}, {w, c1}, {c1, x}, {c2, y_1}, {c2, y_2}, {c3, z}, {c3, p},
                     {p, q}, {q, c4}, {p, c4}, {c4, r}, {r, t}, {c4, t}});
}

}  // namespace fixtures
