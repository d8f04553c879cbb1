#include <doctest.h>

#include "linsds/graph.hpp"
#include "linsds/random_instances.hpp"

using namespace linsds;

namespace {
const FieldSpec kF2 = FieldSpec::prime(2);
}

TEST_CASE("circ builds cycle graphs") {
    Graph c4 = circ(4);
    CHECK(c4.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(circ(3).edges().size() == 3);
    Graph c5 = circ(5);
    CHECK(c5.edges().size() == 5);
    for (std::size_t v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK_THROWS_AS(circ(2), Error);
}

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), Error);
}

TEST_CASE("connectivity is reported") {
    CHECK(circ(4).is_connected());
    CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK_FALSE(Graph(2, {}).is_connected());
}

TEST_CASE("adjacency matrix of the 4-cycle") {
    Matrix expected =
        Matrix::from_ints(kF2, {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    CHECK(adjacency_matrix(circ(4), kF2) == expected);
    CHECK(adjacency_matrix(Graph(3, {}), kF2).is_zero());
}

TEST_CASE("adjacency matrix matches pairwise queries") {
    Rng rng(8);
    Graph g = random_graph(rng, 6);
    Matrix m = adjacency_matrix(g, FieldSpec::prime(5));
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(m.at(i, j).is_zero() == !g.adjacent(i, j));
        }
    }
}

TEST_CASE("expansion of the 4-cycle by (2,3,2,2)") {
    ExpandedGraph eg = expand_graph(circ(4), MultiplicityVector({2, 3, 2, 2}));
    CHECK(eg.graph.vertex_count() == 9);
    CHECK(eg.blocks[1] == std::pair<std::size_t, std::size_t>{2, 3});
    // the block of vertex 1 is a triangle
    CHECK(eg.graph.adjacent(2, 3));
    CHECK(eg.graph.adjacent(2, 4));
    CHECK(eg.graph.adjacent(3, 4));
    // adjacency lifts from the base and nothing else
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            if (i == j) continue;
            bool expected = eg.phi[i] == eg.phi[j] || eg.base.adjacent(eg.phi[i], eg.phi[j]);
            CHECK(eg.graph.adjacent(i, j) == expected);
        }
    }
}

TEST_CASE("all-ones expansion is the base graph") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 3}});
    ExpandedGraph eg = expand_graph(g, MultiplicityVector({1, 1, 1, 1}));
    CHECK(eg.graph == g);
    CHECK(eg.phi == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("expanding an edge by (2,1) gives the triangle") {
    ExpandedGraph eg = expand_graph(Graph(2, {{0, 1}}), MultiplicityVector({2, 1}));
    CHECK(eg.graph.vertex_count() == 3);
    CHECK(eg.graph.edges().size() == 3);
}

TEST_CASE("every fiber induces a clique") {
    Rng rng(15);
    Graph g = random_graph(rng, 5);
    std::vector<std::size_t> counts;
    for (std::size_t v = 0; v < 5; ++v) counts.push_back(1 + rng.below(3));
    ExpandedGraph eg = expand_graph(g, MultiplicityVector(counts));
    for (std::size_t v = 0; v < 5; ++v) {
        auto [off, len] = eg.blocks[v];
        for (std::size_t a = off; a < off + len; ++a) {
            for (std::size_t b = a + 1; b < off + len; ++b) CHECK(eg.graph.adjacent(a, b));
        }
    }
}

TEST_CASE("multiplicity validation") {
    CHECK_THROWS_AS(MultiplicityVector({1, 0, 1}), Error);
    CHECK_THROWS_AS(expand_graph(circ(4), MultiplicityVector({1, 1})), Error);
}
