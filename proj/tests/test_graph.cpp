#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sqfactor/corpus.hpp"
#include "sqfactor/errors.hpp"
#include "sqfactor/graph.hpp"
#include "sqfactor/graph_io.hpp"

using namespace sqfactor;
using fixtures::make;

namespace {

std::set<Edge> edge_set(const Graph& g) {
    const auto e = g.edges();
    return {e.begin(), e.end()};
}

/// Edges written with the external labels, so graphs read back with different dense ids compare equal.
std::set<std::pair<std::uint64_t, std::uint64_t>> labelled_edges(const Graph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const Edge& e : g.edges()) {
        out.emplace(std::min(g.label(e.u), g.label(e.v)), std::max(g.label(e.u), g.label(e.v)));
    }
    return out;
}

}  // namespace

TEST_CASE("edge is stored in canonical order") {
    const Edge e(5, 2);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
    CHECK(e.other(2) == 5);
    CHECK(Edge(2, 5) == Edge(5, 2));
}

TEST_CASE("graph construction rejects non-simple input") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), argument_error);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, dup), argument_error);
    const std::vector<Edge> range{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, range), argument_error);
}

TEST_CASE("parse_edge_list") {
    SUBCASE("path on three vertices") {
        const Graph g = parse_edge_list("0 1\n1 2");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("self-loop") { CHECK_THROWS_AS(parse_edge_list("0 0"), format_error); }
    SUBCASE("duplicate edge") {
        CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), format_error);
        CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), format_error);
    }
    SUBCASE("non-integer token") {
        CHECK_THROWS_AS(parse_edge_list("0 a"), format_error);
        CHECK_THROWS_AS(parse_edge_list("0 -1"), format_error);
        CHECK_THROWS_AS(parse_edge_list("0 1 2"), format_error);
        CHECK_THROWS_AS(parse_edge_list("7"), format_error);
    }
    SUBCASE("comments and blank lines, first-appearance ids") {
        const Graph g = parse_edge_list("# header\n\n10 30\n  30 20 \n# trailing\n");
        CHECK(g.vertex_count() == 3);
        CHECK(g.label(0) == 10);
        CHECK(g.label(1) == 30);
        CHECK(g.label(2) == 20);
        CHECK(g.has_edge(1, 2));
        CHECK(g.find_label(20) == 2);
        CHECK(g.find_label(99) == kNoVertex);
    }
    SUBCASE("error message carries the line number") {
        try {
            parse_edge_list("0 1\n1 2\n2 2\n");
            FAIL("expected format_error");
        } catch (const format_error& ex) {
            CHECK(std::string(ex.what()).find("line 3") != std::string::npos);
        }
    }
    SUBCASE("stream overload") {
        std::istringstream in("0 1\n1 2\n2 0\n");
        CHECK(parse_edge_list(in).edge_count() == 3);
    }
}

TEST_CASE("square examples") {
    SUBCASE("path closes to a triangle") {
        CHECK(edge_set(square(fixtures::path(3))) == edge_set(fixtures::complete(3)));
    }
    SUBCASE("K_{1,3} squares to K4") {
        CHECK(edge_set(square(fixtures::star(3))) == edge_set(fixtures::complete(4)));
    }
    SUBCASE("C6 squares to a 4-regular graph") {
        const Graph sq = square(fixtures::cycle(6));
        CHECK(sq.edge_count() == 12);
        for (VertexId v = 0; v < 6; ++v) {
            CHECK(sq.degree(v) == 4);
            CHECK_FALSE(sq.has_edge(v, (v + 3) % 6));
        }
    }
}

TEST_CASE("distance examples") {
    const Graph tri = fixtures::complete(3);
    CHECK(distance(tri, 0, 1) == 1);
    CHECK(distance(tri, 1, 2) == 1);
    CHECK(distance(fixtures::path(3), 0, 2) == 2);
    const Graph two = make(4, {{0, 1}, {2, 3}});
    CHECK(distance(two, 0, 3) == kUnreachable);
    CHECK(distance(two, 2, 2) == 0);
    CHECK_THROWS_AS(distance(tri, 0, 7), argument_error);
}

TEST_CASE("two-edge connectivity examples") {
    CHECK(is_two_edge_connected(fixtures::cycle(4)));
    CHECK_FALSE(is_two_edge_connected(fixtures::path(3)));
    CHECK(is_two_edge_connected(fixtures::bowtie()));
    CHECK_FALSE(is_two_edge_connected(make(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_two_edge_connected(Graph::from_edges(1, std::span<const Edge>{})));
}

TEST_CASE("essential two-edge connectivity examples") {
    CHECK(is_essentially_two_edge_connected(fixtures::star(4)));
    CHECK_FALSE(is_essentially_two_edge_connected(fixtures::path(4)));
    CHECK(is_essentially_two_edge_connected(fixtures::path(3)));
    CHECK(is_essentially_two_edge_connected(fixtures::triangle_pendant()));
    CHECK_FALSE(is_essentially_two_edge_connected(fixtures::bridged_blocks_graph()));
    CHECK_THROWS_AS(is_essentially_two_edge_connected(make(4, {{0, 1}, {2, 3}})), argument_error);
}

TEST_CASE("bridges and articulation points on the block-structure example") {
    using namespace fixtures::bridged_blocks;
    const Graph g = fixtures::bridged_blocks_graph();
    const std::vector<VertexId> expected_cuts{c1, c2, c3, p, c4};
    std::vector<VertexId> sorted = expected_cuts;
    std::sort(sorted.begin(), sorted.end());
    CHECK(articulation_points(g) == sorted);
    const std::vector<Edge> expected_bridges{Edge(c1, x), Edge(c2, y_1), Edge(c2, y_2), Edge(c3, z), Edge(c3, p)};
    std::vector<Edge> sorted_bridges = expected_bridges;
    std::sort(sorted_bridges.begin(), sorted_bridges.end());
    CHECK(bridges(g) == sorted_bridges);
}

TEST_CASE("induced subgraph keeps labels and id maps") {
    const Graph g = parse_edge_list("5 6\n6 7\n7 5\n7 8\n");
    const std::vector<VertexId> keep{0, 2, 3};
    const Subgraph sub = induced_subgraph(g, keep);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.graph.label(2) == 8);
    CHECK(sub.to_host == keep);
    CHECK(sub.from_host[1] == kNoVertex);
    CHECK(sub.edge_to_host(Edge(0, 1)) == Edge(0, 2));
}

TEST_CASE("square agrees with an all-pairs-distance oracle") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph& g : corpus::connected_graphs(n)) {
            REQUIRE(edge_set(square(g)) == oracle::square_edges(g));
        }
    }
    corpus::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a) {
            for (VertexId b = a + 1; b < n; ++b) {
                if (std::bernoulli_distribution(0.3)(rng)) {
                    edges.emplace_back(a, b);
                }
            }
        }
        const Graph g = Graph::from_edges(n, edges);
        const Graph sq = square(g);
        REQUIRE(edge_set(sq) == oracle::square_edges(g));
        for (const Edge& e : g.edges()) {
            REQUIRE(sq.has_edge(e.u, e.v));
        }
    }
}

TEST_CASE("connectivity predicates agree with deletion oracles") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const Graph& g : corpus::connected_graphs(n)) {
            const auto cuts = oracle::cut_vertices(g);
            const auto cut_edges = oracle::cut_edges(g);
            REQUIRE(articulation_points(g) == cuts);
            REQUIRE(bridges(g) == cut_edges);
            REQUIRE(is_biconnected(g) == oracle::biconnected(g));
            REQUIRE(is_two_edge_connected(g) == cut_edges.empty());
            bool essential = true;
            for (const Edge& e : g.edges()) {
                if (oracle::nontrivial_components(g, {e}) >= 2) {
                    essential = false;
                }
            }
            REQUIRE(is_essentially_two_edge_connected(g) == essential);
            if (is_two_edge_connected(g)) {
                REQUIRE(is_essentially_two_edge_connected(g));
            }
        }
    }
}

TEST_CASE("edge list and JSON round trips") {
    corpus::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const Graph g = corpus::random_lemma_graph(rng, 25);
        const Graph back = parse_edge_list(to_edge_list(g));
        CHECK(labelled_edges(back) == labelled_edges(g));
        CHECK(corpus::canonical_key(back) == corpus::canonical_key(g));
        CHECK(graph_from_json(to_json(g)) == g);
    }
    const Graph labelled = parse_edge_list("10 20\n20 30\n");
    CHECK(labelled_edges(parse_edge_list(to_edge_list(labelled))) == labelled_edges(labelled));
    CHECK(graph_from_json(to_json(labelled)) == labelled);
    CHECK(to_json(fixtures::path(3)) == R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), format_error);
    CHECK_THROWS_AS(graph_from_json("not json"), format_error);
}

TEST_CASE("DOT export marks square-only edges dashed") {
    const Graph g = fixtures::path(3);
    const std::string plain = to_dot(g);
    CHECK(plain.find("graph G {") != std::string::npos);
    CHECK(plain.find("0 -- 1;") != std::string::npos);
    const std::vector<TaggedEdge> factor{{Edge(0, 1), EdgeOrigin::original},
                                         {Edge(1, 2), EdgeOrigin::original},
                                         {Edge(0, 2), EdgeOrigin::square_only}};
    const std::string dot = to_dot(g, factor);
    CHECK(dot.find("0 -- 2 [style=dashed];") != std::string::npos);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
}
