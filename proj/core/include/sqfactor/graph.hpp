#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace sqfactor {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Undirected edge stored as (min, max).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(VertexId x) const { return u == x || v == x; }
    VertexId other(VertexId x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

enum class EdgeOrigin { original, square_only };

struct TaggedEdge {
    Edge edge;
    EdgeOrigin origin = EdgeOrigin::original;

    auto operator<=>(const TaggedEdge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Each vertex carries an external label (the token it had in the input file) so that
/// output can be written in the caller's numbering. Labels default to the dense id.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Throws argument_error on self-loops, duplicate
    /// edges or endpoints >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::uint64_t> labels = {});

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_vertex(VertexId v) const { return v < adjacency_.size(); }
    bool has_edge(VertexId a, VertexId b) const;

    /// All edges in canonical order.
    std::vector<Edge> edges() const;

    std::uint64_t label(VertexId v) const { return labels_[v]; }
    const std::vector<std::uint64_t>& labels() const { return labels_; }
    bool has_identity_labels() const;

    /// Dense id of a label, or kNoVertex.
    VertexId find_label(std::uint64_t label) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adjacency_ == b.adjacency_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::uint64_t> labels_;
    std::size_t edge_count_ = 0;
};

/// Induced subgraph together with the id translation in both directions.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> to_host;    ///< subgraph id -> host id
    std::vector<VertexId> from_host;  ///< host id -> subgraph id, kNoVertex when dropped

    Edge edge_to_host(Edge e) const { return {to_host[e.u], to_host[e.v]}; }
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Graph on the same vertices joining every pair at distance 1 or 2.
Graph square(const Graph& g);

/// Shortest-path length, kUnreachable when u and v lie in different components.
std::size_t distance(const Graph& g, VertexId u, VertexId v);
std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

/// Cut-edges, canonical order.
std::vector<Edge> bridges(const Graph& g);
/// Articulation vertices, ascending.
std::vector<VertexId> articulation_points(const Graph& g);

/// Connected, at least 3 vertices, no articulation vertex.
bool is_biconnected(const Graph& g);
/// Connected, at least 2 vertices, no cut-edge.
bool is_two_edge_connected(const Graph& g);
/// No single edge deletion leaves two components that both contain an edge. Throws argument_error if g is disconnected.
bool is_essentially_two_edge_connected(const Graph& g);

/// Subgraph induced by the vertices with keep[v] == true. Labels carry over.
Subgraph induced_subgraph(const Graph& g, const std::vector<bool>& keep);
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

}  // namespace sqfactor
