#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqfactor/certificate.hpp"
#include "sqfactor/errors.hpp"
#include "sqfactor/graph.hpp"
#include "sqfactor/ham_engine.hpp"
#include "sqfactor/structure.hpp"

namespace sqfactor {

enum class ViolationKind {
    degenerate_graph,     ///< one vertex or one edge: no even factor exists in the square
    small_star,           ///< K_{1,2} or K_{1,3}: no [2,4]-factor with a degree-4 vertex
    nontrivial_bridge,
    bad_leaf,
    bad_leaf_pair_at_distance_four,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<VertexId> vertices;
    std::optional<Edge> edge;

    std::string describe(const Graph& g) const;
};

/// Thrown by the constructions when their hypotheses fail; carries every violation found.
class unmet_hypotheses : public precondition_error {
public:
    unmet_hypotheses(std::string construction, std::vector<Violation> violations, const Graph& g);

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Empty when g has no non-trivial bridge and no bad leaf; K_{1,2} and K_{1,3} pass by exception.
std::vector<Violation> check_lemma_preconditions(const Graph& g, const StructureClassification& cls);

/// Empty when g has no non-trivial bridge and no two bad leaves at distance exactly 4.
/// Throws internal_error if two bad leaves are closer than 3.
std::vector<Violation> check_theorem_preconditions(const Graph& g, const StructureClassification& cls);

struct BuildOptions {
    SearchBudget cycle_budget;
};

/// One step of the block-by-block construction of the factor of the leaf-stripped graph.
struct PeelStep {
    enum class Kind {
        root_cycle,      ///< cycle of the root block
        bridge_deferred, ///< leaf bridge parked until its cut vertex's first cyclic child
        leaf_path,       ///< first cyclic child absorbs the parked leaves: cycle - f1 + v0-l1-...-lj-vk
        disjoint_union,  ///< first cyclic child, no parked leaves: cycle glued at v0
        swap,            ///< later cyclic child: cycle - f1 - e + w-vk, e a designated edge v0-w
    };

    Kind kind;
    BlockIndex block;
    VertexId cut_vertex = kNoVertex;  ///< parent cut vertex (stripped-graph ids)
    std::vector<Edge> cycle;          ///< block cycle edges before editing
    std::vector<Edge> added;          ///< edges added beyond the cycle
    std::vector<Edge> removed;
};

struct LemmaConstruction {
    FactorCertificate certificate;
    Subgraph stripped;               ///< G' = G - M and its id maps
    BlockCutTree blocks;             ///< of G'
    BlockOrdering order;             ///< of G'
    std::vector<PeelStep> steps;     ///< stripped-graph ids
    std::vector<std::vector<Edge>> leaf_cycles;  ///< host ids, one per trivial cut vertex
    bool star = false;
};

LemmaConstruction lemma_factor_traced(const Graph& g, std::optional<VertexId> u = std::nullopt,
                                      const BuildOptions& options = {});

/// [2,4]-factor certificate of square(g) with designations for u and every cut vertex.
/// Throws unmet_hypotheses, precondition_error for an unusable u, internal_error with the peel trace on any
/// broken invariant.
inline FactorCertificate lemma_factor(const Graph& g, std::optional<VertexId> u = std::nullopt,
                                      const BuildOptions& options = {}) {
    return lemma_factor_traced(g, u, options).certificate;
}

/// Where a bad leaf x (neighbour y) is re-attached when the factor of G - X is extended to G.
struct BadLeafRecord {
    VertexId x = kNoVertex;
    VertexId y = kNoVertex;
    VertexId z = kNoVertex;
    VertexId z_prime = kNoVertex;  ///< third case only

    auto operator<=>(const BadLeafRecord&) const = default;
};

/// All ids are host (G) ids.
struct BadLeafPlan {
    std::vector<VertexId> bad_leaves;                ///< X
    std::vector<VertexId> paired_leaves;             ///< X0: bad leaves with another bad leaf at distance 3
    std::vector<std::vector<VertexId>> cliques;      ///< y-vertices of each clique, ascending
    std::vector<std::vector<VertexId>> clique_leaves;///< matching x-vertices
    std::vector<BadLeafRecord> on_factor_edge;       ///< y has an original factor edge y-z
    std::vector<BadLeafRecord> to_noncut;            ///< z is a non-cut neighbour of y
    std::vector<BadLeafRecord> to_cut;               ///< z is a cut neighbour, z' re-routes one of z's edges

    std::vector<Edge> clique_matchings;  ///< E0
    std::vector<Edge> add_on_factor;     ///< E1
    std::vector<Edge> drop_on_factor;    ///< E'1
    std::vector<Edge> add_noncut;        ///< E2
    std::vector<Edge> add_cut;           ///< E3
    std::vector<Edge> drop_cut;          ///< E'3

    std::vector<Edge> additions() const;
    std::vector<Edge> removals() const;
    std::string describe(const Graph& g) const;
};

/// Plans the re-attachment of the bad leaves of g. `stripped` is g minus its bad leaves and
/// `f_prime` a lemma certificate of stripped.graph.
BadLeafPlan plan_bad_leaves(const Graph& g, const Subgraph& stripped, const FactorCertificate& f_prime);

struct TheoremConstruction {
    FactorCertificate certificate;
    std::optional<LemmaConstruction> lemma;
    BadLeafPlan plan;
};

TheoremConstruction build_factor_traced(const Graph& g, const BuildOptions& options = {});

/// [2,4]-factor of square(g) for graphs without non-trivial bridges and without bad leaves at distance 4.
inline FactorCertificate build_factor(const Graph& g, const BuildOptions& options = {}) {
    return build_factor_traced(g, options).certificate;
}

/// K_{1,s} with s >= 1; returns the centre or kNoVertex.
VertexId star_center(const Graph& g);

}  // namespace sqfactor
