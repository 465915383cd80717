#include "sqfactor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqfactor/errors.hpp"

namespace sqfactor {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::uint64_t> labels) {
    Graph g;
    g.adjacency_.assign(n, {});
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw argument_error("self-loop at vertex " + std::to_string(e.u));
        }
        if (e.v >= n) {
            throw argument_error("edge endpoint " + std::to_string(e.v) + " out of range");
        }
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& list = g.adjacency_[v];
        std::sort(list.begin(), list.end());
        if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
            throw argument_error("duplicate edge " + std::to_string(v) + "-" + std::to_string(*dup));
        }
    }
    g.edge_count_ = edges.size();
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), std::uint64_t{0});
    } else if (labels.size() != n) {
        throw argument_error("label table size does not match vertex count");
    }
    g.labels_ = std::move(labels);
    return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
        return false;
    }
    const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
    VertexId target = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
    return std::binary_search(list.begin(), list.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool Graph::has_identity_labels() const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] != i) {
            return false;
        }
    }
    return true;
}

VertexId Graph::find_label(std::uint64_t label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? kNoVertex : static_cast<VertexId>(it - labels_.begin());
}

}  // namespace sqfactor
