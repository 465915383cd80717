#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfactor/graph.hpp"

namespace sqfactor {

/// Two factor edges at `vertex` vouching for one of the lemma's degree/originality properties.
struct Designation {
    VertexId vertex = kNoVertex;
    std::array<Edge, 2> edges;

    auto operator<=>(const Designation&) const = default;
};

/// A factor of square(host) plus the designated edges that witness the lemma properties.
///
/// `kind == lemma` certificates carry designations and are checked property by property;
/// `kind == theorem` certificates only claim a [2,4]-factor.
struct FactorCertificate {
    enum class Kind { lemma, theorem };

    Kind kind = Kind::lemma;
    Graph host;
    std::vector<TaggedEdge> edges;  ///< canonical order
    std::optional<Designation> u;
    std::vector<Designation> cuts;  ///< ascending by vertex

    std::vector<std::size_t> degrees() const;
    const Designation* designation_at(VertexId v) const;
};

/// Builds a sorted, tagged edge list; origin is `original` iff the edge is in host.
std::vector<TaggedEdge> tag_edges(const Graph& host, const std::vector<Edge>& edges);

/// JSON with the host graph embedded so a certificate can be verified on its own.
std::string certificate_to_json(const FactorCertificate& cert);
FactorCertificate certificate_from_json(std::string_view text);

}  // namespace sqfactor
