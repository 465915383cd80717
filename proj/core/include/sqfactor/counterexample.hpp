#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqfactor/graph.hpp"

namespace sqfactor {

/// A graph glued into the family at `hub`; the connecting arc leaves from `arc_end`
/// (kNoVertex picks the smallest vertex other than the hub).
struct AttachmentGraph {
    Graph graph;
    VertexId hub = 0;
    VertexId arc_end = kNoVertex;
};

AttachmentGraph triangle_attachment();

/// Two hubs a, b joined by 4s+1 spokes w_i (each adjacent to a, b and a pendant leaf v_i),
/// with an attachment graph at each hub and one arc between the attachments.
struct CounterexampleDescriptor {
    unsigned s = 1;
    VertexId hub_a = kNoVertex;
    VertexId hub_b = kNoVertex;
    std::vector<std::pair<VertexId, VertexId>> spokes;  ///< (w_i, v_i)
    std::vector<VertexId> g1_vertices;
    std::vector<VertexId> g2_vertices;
    Edge arc;
    bool essentially_two_edge_connected = false;
    bool leaf_deleted_two_connected = false;
};

/// Throws argument_error for invalid hub/arc ids or attachments that are not essentially 2-edge connected.
std::pair<Graph, CounterexampleDescriptor> gen_counterexample(unsigned s, const AttachmentGraph& g1,
                                                              const AttachmentGraph& g2);

/// Pigeonhole argument for the family: every leaf v_i sees only {w_i, a, b} in the square, so it
/// needs a factor edge into {a, b}, while a and b together offer at most 4s such edges.
struct CountingProof {
    unsigned s = 1;
    std::vector<VertexId> leaves;
    std::size_t demand = 0;    ///< leaves needing an edge into {a, b}
    std::size_t capacity = 0;  ///< 2 * (2s)
    std::string argument;
};

/// nullopt when the descriptor does not match g or some leaf has extra square neighbours.
std::optional<CountingProof> counting_certificate(const Graph& g, const CounterexampleDescriptor& d);

std::string descriptor_to_json(const CounterexampleDescriptor& d);
CounterexampleDescriptor descriptor_from_json(std::string_view text);

}  // namespace sqfactor
