#include "sqfactor/factor_search.hpp"

#include <algorithm>
#include <numeric>

#include "sqfactor/errors.hpp"

namespace sqfactor {

std::string_view to_string(SearchOutcome outcome) {
    switch (outcome) {
        case SearchOutcome::yes: return "yes";
        case SearchOutcome::no: return "no";
        case SearchOutcome::out_of_budget: return "out_of_budget";
    }
    return "unknown";
}

namespace {

struct OutOfNodes {};

/// Edge-by-edge include/exclude search over the square with degree and connectivity pruning.
class EvenFactorSearch {
public:
    EvenFactorSearch(const Graph& sq, unsigned s, bool require_degree_four, std::optional<std::uint64_t> max_nodes)
        : n_(sq.vertex_count()),
          max_degree_(2 * static_cast<std::size_t>(s)),
          require_four_(require_degree_four),
          max_nodes_(max_nodes),
          degree_(n_, 0),
          remaining_(n_, 0),
          parent_(n_) {
        // Vertices of large square degree first; each vertex's edges to later vertices follow it.
        std::vector<VertexId> order(n_);
        std::iota(order.begin(), order.end(), VertexId{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](VertexId a, VertexId b) { return sq.degree(a) > sq.degree(b); });
        std::vector<std::size_t> position(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            position[order[i]] = i;
        }
        edges_ = sq.edges();
        for (Edge& e : edges_) {
            if (position[e.u] > position[e.v]) {
                std::swap(e.u, e.v);
            }
        }
        std::sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
            return std::pair{position[a.u], position[a.v]} < std::pair{position[b.u], position[b.v]};
        });
        for (const Edge& e : edges_) {
            ++remaining_[e.u];
            ++remaining_[e.v];
        }
        chosen_.assign(edges_.size(), false);
    }

    bool run() {
        for (VertexId v = 0; v < n_; ++v) {
            if (!feasible(v)) {
                return false;
            }
        }
        return n_ > 0 && search(0);
    }

    std::uint64_t nodes() const { return nodes_; }

    std::vector<Edge> witness() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (chosen_[i]) {
                out.emplace_back(edges_[i].u, edges_[i].v);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool feasible(VertexId v) const {
        if (degree_[v] > max_degree_) {
            return false;
        }
        std::size_t lowest = std::max<std::size_t>(2, degree_[v]);
        lowest += lowest % 2;
        return lowest <= std::min(max_degree_, degree_[v] + remaining_[v]);
    }

    VertexId find(VertexId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    /// Chosen edges up to `decided` plus all undecided edges must still span one component.
    bool connected_possible(std::size_t decided) {
        std::iota(parent_.begin(), parent_.end(), VertexId{0});
        std::size_t components = n_;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i <= decided && !chosen_[i]) {
                continue;
            }
            VertexId a = find(edges_[i].u);
            VertexId b = find(edges_[i].v);
            if (a != b) {
                parent_[a] = b;
                --components;
            }
        }
        return components == 1;
    }

    bool complete() const {
        if (!require_four_) {
            return true;
        }
        return std::find(degree_.begin(), degree_.end(), std::size_t{4}) != degree_.end();
    }

    bool search(std::size_t index) {
        ++nodes_;
        if (max_nodes_ && nodes_ > *max_nodes_) {
            throw OutOfNodes{};
        }
        if (index == edges_.size()) {
            return complete();
        }
        const VertexId u = edges_[index].u;
        const VertexId v = edges_[index].v;
        --remaining_[u];
        --remaining_[v];
        const bool boundary = remaining_[u] == 0 || remaining_[v] == 0;

        ++degree_[u];
        ++degree_[v];
        chosen_[index] = true;
        if (feasible(u) && feasible(v) && (!boundary || connected_possible(index)) && search(index + 1)) {
            return true;
        }
        chosen_[index] = false;
        --degree_[u];
        --degree_[v];

        if (feasible(u) && feasible(v) && (!boundary || connected_possible(index)) && search(index + 1)) {
            return true;
        }
        ++remaining_[u];
        ++remaining_[v];
        return false;
    }

    std::size_t n_;
    std::size_t max_degree_;
    bool require_four_;
    std::optional<std::uint64_t> max_nodes_;
    std::vector<Edge> edges_;
    std::vector<bool> chosen_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> remaining_;
    std::vector<VertexId> parent_;
    std::uint64_t nodes_ = 0;
};

FactorSearchResult run_search(const Graph& g, unsigned s, bool require_four, const FactorSearchBudget& budget) {
    if (s == 0) {
        throw argument_error("s must be a positive integer");
    }
    const Graph sq = square(g);
    FactorSearchResult result;
    if (!budget.max_nodes &&
        (sq.vertex_count() > budget.max_vertices || sq.edge_count() > budget.max_square_edges)) {
        result.outcome = SearchOutcome::out_of_budget;
        result.reason = "square has " + std::to_string(sq.vertex_count()) + " vertices and " +
                        std::to_string(sq.edge_count()) + " edges, above the exact-search limits of " +
                        std::to_string(budget.max_vertices) + " and " + std::to_string(budget.max_square_edges) +
                        "; pass a node budget to search anyway";
        return result;
    }
    EvenFactorSearch search(sq, s, require_four, budget.max_nodes);
    try {
        bool found = search.run();
        result.outcome = found ? SearchOutcome::yes : SearchOutcome::no;
        if (found) {
            result.witness = search.witness();
        }
    } catch (const OutOfNodes&) {
        result.outcome = SearchOutcome::out_of_budget;
        result.reason = "node budget of " + std::to_string(*budget.max_nodes) + " exhausted";
    }
    result.nodes_explored = search.nodes();
    return result;
}

}  // namespace

FactorSearchResult exists_factor(const Graph& g, unsigned s, const FactorSearchBudget& budget) {
    return run_search(g, s, false, budget);
}

FactorSearchResult exists_degree4_factor(const Graph& g, const FactorSearchBudget& budget) {
    return run_search(g, 2, true, budget);
}

bool degree4_variant_check(const Graph& g, const FactorSearchBudget& budget) {
    FactorSearchResult result = exists_degree4_factor(g, budget);
    if (result.outcome == SearchOutcome::out_of_budget) {
        throw budget_error("degree-4 factor search undecided: " + result.reason, result.nodes_explored, result.reason);
    }
    return result.outcome == SearchOutcome::yes;
}

}  // namespace sqfactor
