#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/embed.hpp>
#include <eoram/error.hpp>
#include <eoram/io.hpp>
#include <eoram/verify.hpp>

#include <doctest.h>

using namespace eoram;
using std::vector;

TEST_CASE("found embeddings are genuine copies")
{
    Rng rng(31);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto host = oracle::random_ordering(rng, oracle::random_graph(rng, 6, 3, 4));
        auto pattern = oracle::random_ordering(rng, oracle::random_graph(rng, 3 + trial % 2, 2, 3));
        auto found = find_edge_ordered_embedding(pattern, host);
        CHECK(found.has_value() == naive_has_copy(pattern, host));
        if (found)
            CHECK(check_embedding(pattern, host, found->vertex_map));

        auto vhost = oracle::random_vertex_order(rng, host.graph());
        auto vpattern = oracle::random_vertex_order(rng, pattern.graph());
        auto vfound = find_vertex_ordered_embedding(vpattern, vhost);
        CHECK(vfound.has_value() == naive_has_copy(vpattern, vhost));
        if (vfound)
            CHECK(check_embedding(vpattern, vhost, vfound->vertex_map));

        auto plain = find_embedding(pattern.graph(), host.graph());
        CHECK(plain.has_value() == naive_has_copy(pattern.graph(), host.graph()));
        if (plain)
            CHECK(check_embedding(pattern.graph(), host.graph(), plain->vertex_map));
    }
}

TEST_CASE("copy enumeration matches the all-injections oracle")
{
    Rng rng(37);
    for (int trial = 0 ; trial < 45 ; ++trial) {
        auto g = oracle::random_graph(rng, 6, 4, 5);
        auto p = oracle::random_graph(rng, 3 + trial % 2, 1, 2);
        if (p.m() == 0)
            continue;
        auto host = oracle::random_ordering(rng, g);
        auto pattern = oracle::random_ordering(rng, p);
        CHECK(enumerate_copies(pattern, host) == naive_copies(pattern, host));
        CHECK(enumerate_copies(pattern, host, default_copy_cap, 3) == naive_copies(pattern, host));
        auto vhost = oracle::random_vertex_order(rng, g);
        auto vpattern = oracle::random_vertex_order(rng, p);
        CHECK(enumerate_copies(vpattern, vhost) == naive_copies(vpattern, vhost));
        CHECK(enumerate_copies(p, g) == naive_copies(p, g));
    }
    CHECK_THROWS_AS(enumerate_copies(edge_monotone_path(3), lex_complete(8), 5), Error);
}

TEST_CASE("the colour filter restricts copies to one colour")
{
    auto host = lex_complete(5);
    // Red exactly on the edges of vertex 0.
    vector<int> colors(host.m(), blue);
    for (int e = 0 ; e < host.m() ; ++e)
        if (host.graph().edge(e).u == 0)
            colors[e] = red;
    auto path = edge_monotone_path(3);
    auto star2 = star(2);
    CHECK(find_edge_ordered_embedding(path, host, ColorFilter{colors, red}).has_value() == naive_has_copy(path, host, ColorFilter{colors, red}));
    auto s = find_edge_ordered_embedding(star2, host, ColorFilter{colors, red});
    REQUIRE(s.has_value());
    CHECK(s->vertex_map[0] == 0);
    for (int e : s->edge_map)
        CHECK(colors[e] == red);
    CHECK(! find_edge_ordered_embedding(lex_complete(3), host, ColorFilter{colors, red}).has_value());
}

TEST_CASE("canonical cliques")
{
    auto found = find_canonical_clique(lex_complete(6), 4);
    REQUIRE(found.has_value());
    CHECK(found->vertices == vector<int>{0, 1, 2, 3});
    CHECK(found->type == CanonicalType::Lex);

    CHECK(canonical_type_name(parse_canonical_type("inv_maxlex")) == "inv_maxlex");
    CHECK_THROWS_AS(parse_canonical_type("nope"), Error);

    Rng rng(41);
    for (int trial = 0 ; trial < 10 ; ++trial) {
        auto host = oracle::random_ordering(rng, Graph::complete(7));
        auto clique = find_canonical_clique(host, 3);
        REQUIRE(clique.has_value());
        CHECK(clique->vertices == vector<int>{0, 1, 2});
        auto four = find_canonical_clique(host, 4);
        if (four) {
            io::json cert = {{"kind", "canonical_clique"}, {"host", io::to_json(host)}, {"n", 4},
                {"vertices", four->vertices}, {"type", canonical_type_name(four->type)}};
            CHECK(verify_certificate_json(cert).ok);
        }
    }
}
