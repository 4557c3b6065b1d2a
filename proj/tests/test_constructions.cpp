#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/error.hpp>

#include <doctest.h>

#include <algorithm>

using namespace eoram;
using std::vector;

TEST_CASE("lexicographic complete graph")
{
    auto g = lex_complete(4);
    vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(g.sequence() == expected);
    CHECK(lex_complete(3).m() == 3);
}

TEST_CASE("lex and max-lex orderings follow their defining rule")
{
    Rng rng(3);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto g = oracle::random_graph(rng, 6, 2, 3);
        auto f = oracle::identity(6);
        rng.shuffle(std::span<int>(f));
        auto key = [&] (Edge e) { return std::pair{std::min(f[e.u], f[e.v]), std::max(f[e.u], f[e.v])}; };

        auto lex = lex_ordering(g, f).sequence();
        for (std::size_t i = 1 ; i < lex.size() ; ++i)
            CHECK(key(lex[i - 1]) < key(lex[i]));

        auto maxlex = max_lex_ordering(g, f).sequence();
        for (std::size_t i = 1 ; i < maxlex.size() ; ++i) {
            auto a = key(maxlex[i - 1]), b = key(maxlex[i]);
            CHECK((a.first < b.first || (a.first == b.first && a.second > b.second)));
        }
    }
}

TEST_CASE("inverse ordering reverses ranks")
{
    auto g = lex_complete(4);
    auto inv = inverse_ordering(g);
    for (int e = 0 ; e < g.m() ; ++e)
        CHECK(inv.rank(e) == g.m() - 1 - g.rank(e));
    CHECK(inverse_ordering(inv) == g);
}

TEST_CASE("named small graphs")
{
    auto p = edge_monotone_path(4);
    CHECK(p.sequence() == vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(matching(4).sequence() == vector<Edge>{{0, 1}, {2, 3}});
    CHECK(star(3).sequence() == vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    auto b = lex_bipartite(2, 2);
    CHECK(b.sequence() == vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("consistent maps reproduce the order and match a brute-force lexicographic test")
{
    Rng rng(17);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto g = oracle::random_ordering(rng, oracle::random_graph(rng, 5, 2, 3));
        auto maps = consistent_maps(g);
        for (const auto & f : maps) {
            CHECK(is_consistent(g, f));
            CHECK(lex_ordering(g.graph(), f) == g);
        }
        CHECK(std::is_sorted(maps.begin(), maps.end()));
        CHECK(is_lexicographic(g) == oracle::lexicographic(g));
        CHECK(is_lexicographic(g) == ! maps.empty());
    }
    CHECK(is_lexicographic(edge_monotone_path(5)));
    CHECK(is_lexicographic(star(4)));
}

TEST_CASE("degeneracy order bounds back-degrees by the degeneracy")
{
    Rng rng(23);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto g = oracle::random_graph(rng, 7, 1, 2);
        auto result = degeneracy_order(g);

        int degeneracy = 0;
        for (unsigned subset = 1 ; subset < (1u << g.n()) ; ++subset) {
            int min_degree = g.n();
            for (int v = 0 ; v < g.n() ; ++v) {
                if (! (subset >> v & 1))
                    continue;
                int d = 0;
                for (int w : g.neighbours(v))
                    d += subset >> w & 1;
                min_degree = std::min(min_degree, d);
            }
            degeneracy = std::max(degeneracy, min_degree);
        }
        CHECK(result.d == degeneracy);

        auto sorted = result.order;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == oracle::identity(g.n()));
        for (std::size_t i = 0 ; i < result.order.size() ; ++i) {
            int back = 0;
            for (std::size_t j = 0 ; j < i ; ++j)
                back += g.has_edge(result.order[i], result.order[j]);
            CHECK(back <= result.d);
        }
    }
}

TEST_CASE("blow-up places each base edge's bridge in its own rank block")
{
    Rng rng(2);
    auto base = oracle::random_ordering(rng, Graph::complete(4));
    constexpr int s = 2;
    for (const auto & bridge : {lexicographic_bridge(), random_bridge(9)}) {
        auto blown = blow_up(base, s, bridge);
        REQUIRE(blown.host.n() == 8);
        CHECK(blown.host.m() == 28);
        for (int i = 0 ; i < 4 ; ++i)
            for (int j = i + 1 ; j < 4 ; ++j) {
                int r = base.rank(base.graph().edge_index(i, j));
                for (int x : blown.partition[i])
                    for (int y : blown.partition[j]) {
                        int rank = blown.host.rank(blown.host.graph().edge_index(x, y));
                        CHECK(rank >= r * s * s);
                        CHECK(rank < (r + 1) * s * s);
                    }
            }
        for (const auto & part : blown.partition)
            CHECK(blown.host.rank(blown.host.graph().edge_index(part[0], part[1])) >= 6 * s * s);
    }

    auto single = blow_up(base, 1, lexicographic_bridge());
    CHECK(oracle::isomorphic(single.host, base));
    CHECK_THROWS_AS(blow_up(edge_monotone_path(3), 2, lexicographic_bridge()), Error);
}
