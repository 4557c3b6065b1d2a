#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/graph.hpp>

#include <doctest.h>

using namespace eoram;

TEST_CASE("graph construction validates its input")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(EdgeOrderedGraph(Graph::complete(3), {0, 0, 1}), Error);
    CHECK_THROWS_AS(VertexOrderedGraph(Graph::complete(3), {0, 1}), Error);
}

TEST_CASE("edges are indexed in sorted pair order")
{
    Graph g(4, {{2, 3}, {1, 0}, {0, 2}});
    REQUIRE(g.m() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    CHECK(g.edge_index(2, 0) == 1);
    CHECK(g.edge_index(1, 3) == -1);
    CHECK(g.degree(0) == 2);

    auto k5 = Graph::complete(5);
    CHECK(k5.m() == 10);
    for (int e = 0 ; e < k5.m() ; ++e)
        CHECK(k5.edge_index(k5.edge(e).u, k5.edge(e).v) == e);
    CHECK(Graph::complete_bipartite(2, 3).m() == 6);
}

TEST_CASE("edge-ordered graphs round-trip through their sequence")
{
    Rng rng(11);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto g = oracle::random_ordering(rng, oracle::random_graph(rng, 6, 1, 2));
        auto h = EdgeOrderedGraph::from_sequence(g.n(), g.sequence());
        CHECK(g == h);
        for (int r = 0 ; r < g.m() ; ++r)
            CHECK(g.rank(g.edge_at_rank(r)) == r);
    }
}

TEST_CASE("canonical forms agree with brute-force isomorphism")
{
    Rng rng(5);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto g = oracle::random_graph(rng, 5, 1, 2);
        auto a = oracle::random_ordering(rng, g);
        auto perm = oracle::identity(5);
        rng.shuffle(std::span<int>(perm));
        auto b = relabel(a, perm);
        CHECK(canonical_form_eog(a) == canonical_form_eog(b));
        CHECK(are_isomorphic_eog(a, b));

        auto c = oracle::random_ordering(rng, g);
        bool same = oracle::isomorphic(a, c);
        CHECK(are_isomorphic_eog(a, c) == same);
        CHECK((canonical_form_eog(a) == canonical_form_eog(c)) == same);
    }
    CHECK_THROWS_AS(canonical_form_eog(lex_complete(11)), Error);
}

TEST_CASE("restrict keeps the inherited order")
{
    auto host = lex_complete(5);
    std::vector<int> vertices{1, 3, 4};
    auto sub = restrict(host, vertices);
    CHECK(sub == lex_complete(3));

    Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<int> ends{0, 3};
    CHECK(restrict(path, ends).m() == 0);
}
