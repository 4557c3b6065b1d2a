#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/embed.hpp>
#include <eoram/error.hpp>
#include <eoram/io.hpp>
#include <eoram/ramsey.hpp>
#include <eoram/verify.hpp>

#include <doctest.h>

#include <filesystem>

using namespace eoram;
using io::json;
using std::vector;

TEST_CASE("JSON round trips")
{
    Rng rng(71);
    auto g = oracle::random_graph(rng, 6, 1, 2);
    CHECK(io::graph_from_json(io::to_json(g)) == g);
    auto eo = oracle::random_ordering(rng, g);
    CHECK(io::edge_ordered_from_json(io::to_json(eo)) == eo);
    auto vo = oracle::random_vertex_order(rng, g);
    CHECK(io::vertex_ordered_from_json(io::to_json(vo)) == vo);

    Coloring c(3, vector<int>(g.m(), 0));
    for (int e = 0 ; e < g.m() ; ++e)
        c.colors[e] = e % 3;
    CHECK(io::coloring_from_json(io::to_json(c)) == c);
    CHECK(io::coloring_from_json(io::to_json(c, &eo), &eo) == c);
    auto by_rank = io::to_json(c, &eo).at("colors");
    for (int r = 0 ; r < eo.m() ; ++r)
        CHECK(by_rank[r].get<int>() == c[eo.edge_at_rank(r)]);

    auto m = ZeroOneMatrix(3, 2, {{1, 2}, {3, 1}});
    CHECK(io::matrix_from_json(io::to_json(m)) == m);
    auto w = ParameterWord::parse({"0", "1"}, 2, {"L1", "1", "L2", "0"});
    CHECK(io::word_from_json(io::to_json(w)) == w);
    auto f = BiOrderedGraph{edge_monotone_path(3), {2, 0, 1}};
    auto f2 = io::bi_ordered_from_json(io::to_json(f));
    CHECK(f2.graph == f.graph);
    CHECK(f2.vertex_rank == f.vertex_rank);

    auto instance = host_for(Graph(3, {{0, 1}, {1, 2}}), 2);
    auto i2 = io::greedy_instance_from_json(io::to_json(instance));
    CHECK(i2.parts == instance.parts);
    CHECK(i2.order == instance.order);
    GreedyCertificate cert = RedBiclique{0, 1, {0, 1}, {12, 13}};
    CHECK(io::greedy_certificate_from_json(io::to_json(cert)) == cert);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(io::graph_from_json(json{{"n", 2}}), Error);
    CHECK_THROWS_AS(io::graph_from_json(json{{"n", 2}, {"edges", {{0, 5}}}}), Error);
    CHECK_THROWS_AS(io::vertex_ordered_from_json(json{{"n", 2}, {"edges", json::array()}, {"vertex_order", {0, 0}}}), Error);
    CHECK_THROWS_AS(io::word_from_json(json{{"alphabet", {"0"}}, {"t", 1}, {"symbols", {"L2"}}}), Error);
    CHECK_THROWS_AS(io::read_file("/nonexistent/file.json"), Error);
    CHECK(! verify_certificate_json(json{{"kind", "mystery"}}).ok);
    CHECK(! verify_certificate_json(json{{"kind", "arrowing"}}).ok);
}

TEST_CASE("emitted certificates verify and tampering is detected")
{
    auto target = lex_complete(3);
    auto answer = lex_ramsey(target, std::nullopt, 7);
    for (const auto & bad : answer.lower_certificates) {
        auto cert = io::bad_coloring_certificate(*bad.host_ordering, target, target, bad.coloring);
        CHECK(verify_certificate_json(cert).ok);
        if (bad.host_n >= 3) {
            // A constant colouring contains a monochromatic triangle.
            auto tampered = cert;
            for (auto & c : tampered["coloring"]["colors"])
                c = 0;
            CHECK(! verify_certificate_json(tampered).ok);
        }
    }
    CHECK(verify_certificate_json(io::arrowing_certificate(lex_complete(6), target, target)).ok);
    CHECK(! verify_certificate_json(io::arrowing_certificate(lex_complete(5), target, target)).ok);
    // Above the brute-force size the verifier re-runs the search.
    auto p3 = edge_monotone_path(3);
    CHECK(verify_certificate_json(io::arrowing_certificate(lex_complete(7), target, target)).ok);
    CHECK(verify_certificate_json(io::arrowing_certificate(Graph::complete(7), target.graph(), target.graph())).ok);
    CHECK(verify_certificate_json(io::arrowing_certificate(lex_complete(3), p3, p3)).ok);

    auto k3 = Graph::complete(3);
    auto classic = classic_ramsey(k3, std::nullopt, 6);
    auto plain = io::bad_coloring_certificate(Graph::complete(5), k3, k3, classic.lower_certificates.back().coloring);
    CHECK(verify_certificate_json(plain).ok);

    auto host = lex_complete(5);
    auto embedding = find_edge_ordered_embedding(p3, host);
    REQUIRE(embedding);
    auto cert = io::embedding_certificate(p3, host, embedding->vertex_map);
    CHECK(verify_certificate_json(cert).ok);
    auto wrong = cert;
    wrong["vertex_map"] = {0, 0, 1};
    CHECK(! verify_certificate_json(wrong).ok);

    auto coloring = Coloring::constant(host.m(), blue);
    auto coloured = io::embedding_certificate(p3, host, embedding->vertex_map, &coloring, red);
    CHECK(! verify_certificate_json(coloured).ok);
    coloured["color"] = blue;
    CHECK(verify_certificate_json(coloured).ok);

    auto instance = host_for(Graph(3, {{0, 1}, {1, 2}}), 2);
    auto all_red = Coloring::constant(630, red);
    auto greedy = io::greedy_certificate(instance, all_red, greedy_embed(instance, all_red));
    CHECK(verify_certificate_json(greedy).ok);
    greedy["coloring"] = io::to_json(Coloring::constant(630, blue));
    CHECK(! verify_certificate_json(greedy).ok);
}

TEST_CASE("dumps are stable and files round trip")
{
    auto j = io::to_json(lex_complete(4));
    CHECK(io::dump(j) == io::dump(io::to_json(io::edge_ordered_from_json(j))));
    CHECK(io::dump(j).back() == '\n');
    auto path = std::filesystem::temp_directory_path() / "eoram-io-test.json";
    io::write_file(path.string(), j);
    CHECK(io::read_file(path.string()) == j);
    std::filesystem::remove(path);
}
