#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sqfactor/corpus.hpp"
#include "sqfactor/factor_builder.hpp"
#include "sqfactor/structure.hpp"

using namespace sqfactor;

TEST_CASE("connected graph enumeration matches the known counts") {
    const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
    const std::vector<std::size_t> biconnected{0, 0, 0, 1, 3, 10, 56, 468};
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto graphs = corpus::connected_graphs(n);
        CHECK(graphs.size() == connected[n]);
        std::size_t count = 0;
        for (const Graph& g : graphs) {
            CHECK(is_connected(g));
            count += is_biconnected(g);
        }
        CHECK(count == biconnected[n]);
    }
}

TEST_CASE("canonical key is a relabelling invariant") {
    corpus::Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const Graph g = corpus::random_biconnected(rng, 8, 4);
        std::vector<VertexId> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), VertexId{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (const Edge& e : g.edges()) {
            edges.emplace_back(perm[e.u], perm[e.v]);
        }
        CHECK(corpus::canonical_key(Graph::from_edges(g.vertex_count(), edges)) == corpus::canonical_key(g));
    }
}

TEST_CASE("generators are reproducible and respect their contracts") {
    corpus::Rng a(17), b(17);
    for (int i = 0; i < 20; ++i) {
        CHECK(corpus::random_lemma_graph(a) == corpus::random_lemma_graph(b));
    }
    corpus::Rng rng(corpus::kDefaultSeed);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 3 + static_cast<std::size_t>(i % 20);
        const Graph bic = corpus::random_biconnected(rng, n, static_cast<std::size_t>(i % 5));
        CHECK(bic.vertex_count() == n);
        CHECK(is_biconnected(bic));

        const Graph tree = corpus::random_block_tree(rng, 25);
        CHECK(is_two_edge_connected(tree));

        const Graph lemma = corpus::random_lemma_graph(rng, 40);
        CHECK(lemma.vertex_count() <= 40);
        CHECK(check_lemma_preconditions(lemma, classify(lemma)).empty());
        CHECK(classify(lemma).bad_leaves.empty());

        const Graph thm = corpus::random_theorem_graph(rng, 40);
        CHECK(thm.vertex_count() <= 40);
        CHECK(check_theorem_preconditions(thm, classify(thm)).empty());
    }
    CHECK_THROWS(corpus::random_biconnected(rng, 2, 0));
}
