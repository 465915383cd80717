#include "sqfactor/ham_engine.hpp"

#include <bit>
#include <sstream>
#include <string>

#include "sqfactor/errors.hpp"

namespace sqfactor {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(VertexId v) { return Mask{1} << v; }

bool has(Mask m, VertexId v) { return (m >> v) & 1U; }

class CycleSearch {
public:
    CycleSearch(const Graph& block, VertexId v1, VertexId v2, std::optional<std::uint64_t> max_nodes)
        : n_(block.vertex_count()), v1_(v1), v2_(v2), max_nodes_(max_nodes) {
        const Graph sq = square(block);
        for (VertexId v = 0; v < n_; ++v) {
            for (VertexId w : block.neighbors(v)) {
                original_[v] |= bit(w);
            }
            for (VertexId w : sq.neighbors(v)) {
                square_[v] |= bit(w);
            }
        }
        full_ = n_ == 64 ? ~Mask{0} : bit(static_cast<VertexId>(n_)) - 1;
    }

    std::optional<std::vector<VertexId>> run() {
        // Branch over the unordered pair {first, last} of v1's cycle neighbours, both original.
        for (Mask firsts = original_[v1_]; firsts != 0; firsts &= firsts - 1) {
            VertexId first = static_cast<VertexId>(std::countr_zero(firsts));
            Mask lasts = first + 1 < 64 ? original_[v1_] & ~(bit(first + 1) - 1) : 0;
            for (; lasts != 0; lasts &= lasts - 1) {
                last_ = static_cast<VertexId>(std::countr_zero(lasts));
                first_ = first;
                path_.assign({v1_, first_});
                Mask unvisited = full_ & ~bit(v1_) & ~bit(first_);
                if (feasible(first_, unvisited) && extend(first_, unvisited)) {
                    return path_;
                }
            }
        }
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

    std::string deepest_state() const {
        std::ostringstream out;
        out << "deepest partial path (" << deepest_.size() << " of " << n_ << " vertices):";
        for (VertexId v : deepest_) {
            out << ' ' << v;
        }
        return out.str();
    }

private:
    bool is_original(VertexId a, VertexId b) const { return has(original_[a], b); }

    /// Cycle edges at v2 as seen when the walk leaves v2 towards `next`.
    bool leaving_v2_ok(VertexId next) const {
        if (v2_ == first_) {
            return is_original(first_, next);
        }
        VertexId prev = path_[path_.size() - 2];
        return is_original(prev, v2_) || is_original(v2_, next);
    }

    bool closing_ok(VertexId cur) const {
        if (!has(square_[cur], last_)) {
            return false;
        }
        if (cur == v2_ && !leaving_v2_ok(last_)) {
            return false;
        }
        if (last_ == v2_ && !is_original(cur, last_)) {
            return false;
        }
        return true;
    }

    /// Necessary conditions for completing a path from `head` through all of `unvisited` ending at last_.
    bool feasible(VertexId head, Mask unvisited) const {
        const Mask open = unvisited | bit(head);
        for (Mask rest = unvisited & ~bit(last_); rest != 0; rest &= rest - 1) {
            VertexId w = static_cast<VertexId>(std::countr_zero(rest));
            if (std::popcount(square_[w] & open) < 2) {
                return false;
            }
        }
        if ((square_[last_] & (open & ~bit(last_))) == 0) {
            return false;
        }
        // The remaining vertices are traversed as one path, so they must induce a connected subgraph of the square.
        Mask reached = bit(last_);
        Mask frontier = reached;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask f = frontier; f != 0; f &= f - 1) {
                next |= square_[std::countr_zero(f)];
            }
            next &= unvisited & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == unvisited;
    }

    bool extend(VertexId cur, Mask unvisited) {
        ++nodes_;
        if (max_nodes_ && nodes_ > *max_nodes_) {
            throw budget_error("constrained cycle search exceeded its node budget of " + std::to_string(*max_nodes_),
                               nodes_, deepest_state());
        }
        if (path_.size() > deepest_.size()) {
            deepest_ = path_;
        }
        if (unvisited == bit(last_)) {
            if (closing_ok(cur)) {
                path_.push_back(last_);
                return true;
            }
            return false;
        }

        const Mask candidates = square_[cur] & unvisited & ~bit(last_);
        const Mask preferred[2] = {candidates & original_[cur], candidates & ~original_[cur]};
        for (Mask group : preferred) {
            for (; group != 0; group &= group - 1) {
                VertexId next = static_cast<VertexId>(std::countr_zero(group));
                if (cur == v2_ && !leaving_v2_ok(next)) {
                    continue;
                }
                const Mask remaining = unvisited & ~bit(next);
                if (next == v2_ && !is_original(cur, next) && (original_[next] & remaining) == 0) {
                    continue;
                }
                if (!feasible(next, remaining)) {
                    continue;
                }
                path_.push_back(next);
                if (extend(next, remaining)) {
                    return true;
                }
                path_.pop_back();
            }
        }
        return false;
    }

    std::size_t n_;
    VertexId v1_;
    VertexId v2_;
    std::optional<std::uint64_t> max_nodes_;
    Mask original_[64] = {};
    Mask square_[64] = {};
    Mask full_ = 0;
    VertexId first_ = kNoVertex;
    VertexId last_ = kNoVertex;
    std::vector<VertexId> path_;
    std::vector<VertexId> deepest_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

CycleWitness constrained_hamiltonian_cycle(const Graph& block, VertexId v1, std::optional<VertexId> v2,
                                           const SearchBudget& budget) {
    const std::size_t n = block.vertex_count();
    if (!block.has_vertex(v1)) {
        throw argument_error("v1 is not a vertex of the block");
    }
    if (v2 && (!block.has_vertex(*v2) || *v2 == v1)) {
        throw argument_error("v2 must be a block vertex distinct from v1");
    }
    if (!is_biconnected(block)) {
        throw precondition_error("constrained cycle search needs a 2-connected block with at least 3 vertices");
    }
    if (n > 64) {
        throw budget_error("blocks above 64 vertices are not supported by the bitset search", 0, "refused");
    }
    if (n > budget.max_vertices && !budget.max_nodes) {
        throw budget_error("block of " + std::to_string(n) + " vertices exceeds the unbounded-search limit of " +
                               std::to_string(budget.max_vertices) + "; pass a node budget to search anyway",
                           0, "refused");
    }

    CycleWitness witness;
    if (n == 3) {
        // The block is a triangle; its only Hamiltonian cycle is itself.
        witness.cycle = {v1, (v1 + 1) % 3, (v1 + 2) % 3};
    } else {
        CycleSearch search(block, v1, v2.value_or(kNoVertex), budget.max_nodes);
        auto path = search.run();
        witness.nodes_explored = search.nodes();
        if (!path) {
            throw internal_error("exhaustive constrained cycle search found no cycle in a 2-connected block");
        }
        witness.cycle = std::move(*path);
    }
    for (std::size_t i = 0; i < witness.cycle.size(); ++i) {
        Edge e(witness.cycle[i], witness.cycle[(i + 1) % witness.cycle.size()]);
        witness.edges.push_back({e, block.has_edge(e.u, e.v) ? EdgeOrigin::original : EdgeOrigin::square_only});
    }
    return witness;
}

}  // namespace sqfactor
