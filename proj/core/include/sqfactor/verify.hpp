#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqfactor/certificate.hpp"
#include "sqfactor/graph.hpp"

namespace sqfactor {

struct PropertyResult {
    bool pass = true;
    std::vector<std::string> witnesses;
};

/// Outcome of checking a factor (and optionally its designations) against a host graph.
struct VerificationReport {
    bool spanning = true;        ///< every vertex has positive degree
    bool connected = true;
    bool all_even = true;
    bool max_degree_ok = true;   ///< every degree <= 2s
    bool edges_in_square = true; ///< simple, inside square(g), origin tags correct
    /// Lemma properties a..e, present for lemma certificates only.
    std::optional<std::array<PropertyResult, 5>> properties;
    std::vector<std::string> witnesses;

    bool pass() const;
};

/// Checks that `edges` form a [2,2s]-factor of square(g) with correct origin tags.
VerificationReport verify_factor(const Graph& g, std::span<const TaggedEdge> edges, unsigned s);

/// verify_factor at s = 2, plus, for lemma certificates, the five designation properties.
/// Cut vertices, leaves and bridges are recomputed from g by brute force.
VerificationReport verify_certificate(const Graph& g, const FactorCertificate& cert);

std::string report_to_json(const VerificationReport& report);

}  // namespace sqfactor
