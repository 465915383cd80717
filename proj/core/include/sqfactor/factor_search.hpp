#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqfactor/graph.hpp"

namespace sqfactor {

/// Exactness contract for the exhaustive factor search. Without a node cap, squares above
/// `max_vertices` vertices or `max_square_edges` edges are refused; a node cap lifts both limits.
struct FactorSearchBudget {
    std::size_t max_vertices = 18;
    std::size_t max_square_edges = 80;
    std::optional<std::uint64_t> max_nodes;
};

enum class SearchOutcome { yes, no, out_of_budget };

std::string_view to_string(SearchOutcome outcome);

struct FactorSearchResult {
    SearchOutcome outcome = SearchOutcome::no;
    std::vector<Edge> witness;  ///< factor edges when outcome == yes
    std::uint64_t nodes_explored = 0;
    std::string reason;         ///< why the budget refused or ran out
};

/// Decides whether square(g) has a [2,2s]-factor. `no` is only returned after the whole space is exhausted.
FactorSearchResult exists_factor(const Graph& g, unsigned s, const FactorSearchBudget& budget = {});

/// Same search restricted to [2,4]-factors with at least one vertex of degree 4.
FactorSearchResult exists_degree4_factor(const Graph& g, const FactorSearchBudget& budget = {});

/// True iff square(g) has a [2,4]-factor with a degree-4 vertex. Throws budget_error when undecided.
bool degree4_variant_check(const Graph& g, const FactorSearchBudget& budget = {});

}  // namespace sqfactor
