#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/ramsey.hpp>
#include <eoram/verify.hpp>

#include <doctest.h>

#include <filesystem>

using namespace eoram;
using std::vector;

TEST_CASE("the copy-hypergraph solver")
{
    CopyHypergraph impossible{2, {{{0, 1}}, {{0}, {1}}}};
    auto r = solve_copy_hypergraph(impossible, 2, {0, 1});
    CHECK(r.arrows);
    CHECK(! r.witness);

    CopyHypergraph possible{2, {{{0, 1}}, {{0}}}};
    SearchOptions plain;
    plain.symmetry_breaking = false;
    auto s = solve_copy_hypergraph(possible, 2, {0, 1}, plain);
    REQUIRE(! s.arrows);
    CHECK(s.witness->colors == vector<int>{red, blue});
}

TEST_CASE("classical Ramsey numbers agree with known values and exhaustive colouring")
{
    struct Case { const char * name; Graph g; int value; };
    vector<Case> cases{
        {"K3", Graph::complete(3), 6},
        {"P3", Graph(3, {{0, 1}, {1, 2}}), 3},
        {"P4", Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 5},
        {"C4", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 6},
        {"K13", Graph(4, {{0, 1}, {0, 2}, {0, 3}}), 6},
        {"2K2", Graph(4, {{0, 1}, {2, 3}}), 5},
    };
    for (const auto & c : cases) {
        CAPTURE(c.name);
        auto answer = classic_ramsey(c.g, std::nullopt, 7);
        REQUIRE(answer.value == c.value);
        CHECK(brute_force_arrows(Graph::complete(c.value), c.g, c.g));
        CHECK(! brute_force_arrows(Graph::complete(c.value - 1), c.g, c.g));
        CHECK(static_cast<int>(answer.lower_certificates.size()) == c.value - 1);
        for (const auto & bad : answer.lower_certificates)
            CHECK(is_bad_coloring(Graph::complete(bad.host_n), c.g, c.g, bad.coloring));
    }
    auto unknown = classic_ramsey(Graph::complete(3), std::nullopt, 5);
    CHECK(! unknown.value);
    CHECK(unknown.searched_to == 5);
}

TEST_CASE("off-diagonal classical numbers")
{
    auto k3 = Graph::complete(3);
    Graph edge(2, {{0, 1}});
    // R(K3, K2) = 3: any blue edge is a blue K2.
    CHECK(classic_ramsey(k3, edge, 6).value == 3);
    auto p3 = Graph(3, {{0, 1}, {1, 2}});
    auto answer = classic_ramsey(k3, p3, 7);
    REQUIRE(answer.value);
    CHECK(brute_force_arrows(Graph::complete(*answer.value), k3, p3));
    CHECK(! brute_force_arrows(Graph::complete(*answer.value - 1), k3, p3));
}

TEST_CASE("lexicographic and ordered numbers")
{
    auto lex = lex_ramsey(lex_complete(3), std::nullopt, 7);
    CHECK(lex.value == 6);
    CHECK(brute_force_arrows(lex_complete(6), lex_complete(3), lex_complete(3)));
    for (const auto & bad : lex.lower_certificates)
        CHECK(is_bad_coloring(*bad.host_ordering, lex_complete(3), lex_complete(3), bad.coloring));

    auto path4 = lex_ramsey(edge_monotone_path(4), std::nullopt, 8);
    REQUIRE(path4.value == 5);
    CHECK(brute_force_arrows(lex_complete(5), edge_monotone_path(4), edge_monotone_path(4)));
    CHECK(! brute_force_arrows(lex_complete(4), edge_monotone_path(4), edge_monotone_path(4)));

    auto monotone = VertexOrderedGraph::natural(edge_monotone_path(3).graph());
    auto ordered = ordered_ramsey(monotone, std::nullopt, 7);
    CHECK(ordered.value == 5);
    auto host = [] (int n) { return VertexOrderedGraph::natural(Graph::complete(n)); };
    CHECK(brute_force_arrows(host(5), monotone, monotone));
    CHECK(! brute_force_arrows(host(4), monotone, monotone));
}

TEST_CASE("ordering classes of complete graphs")
{
    // For n >= 3 no non-trivial vertex permutation fixes every edge, so classes have m!/n! members.
    CHECK(enumerate_host_ordering_classes(3).size() == 1);
    auto four = enumerate_host_ordering_classes(4);
    CHECK(static_cast<long long>(four.size()) == oracle::factorial(6) / oracle::factorial(4));
    for (std::size_t i = 0 ; i < four.size() ; ++i) {
        CHECK(canonical_form_eog(four[i]).sequence == four[i].sequence());
        for (std::size_t j = i + 1 ; j < four.size() ; ++j)
            CHECK(! oracle::isomorphic(four[i], four[j]));
    }
    long long five = 0;
    for_each_host_ordering_class(5, [&] (const EdgeOrderedGraph &) { ++five; });
    CHECK(five == oracle::factorial(10) / oracle::factorial(5));
    CHECK_THROWS_AS(enumerate_host_ordering_classes(6), Error);
}

TEST_CASE("edge-ordered matching number")
{
    auto m4 = matching(4);
    auto answer = edge_ordered_ramsey(m4, m4, 5);
    REQUIRE(answer.value == 5);
    CHECK(answer.lower_certificates.size() == 30);
    for (const auto & bad : answer.lower_certificates)
        CHECK(is_bad_coloring(*bad.host_ordering, m4, m4, bad.coloring));
    REQUIRE(answer.witness_host);
    CHECK(brute_force_arrows(*answer.witness_host, m4, m4));
    CHECK_THROWS_AS(edge_ordered_ramsey(m4, m4, 6), Error);
}

TEST_CASE("non-lexicographic targets are rejected")
{
    std::optional<EdgeOrderedGraph> target;
    for (const auto & g : enumerate_host_ordering_classes(4))
        if (! oracle::lexicographic(g)) {
            target = g;
            break;
        }
    REQUIRE(target);
    CHECK_THROWS_AS(lex_ramsey(*target, std::nullopt, 6), Error);
}

TEST_CASE("adversary colouring matches exhaustive colouring")
{
    Rng rng(43);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto host = oracle::random_ordering(rng, oracle::random_graph(rng, 5, 3, 4));
        auto g = oracle::random_graph(rng, 3, 2, 3);
        if (g.m() == 0)
            continue;
        auto red_target = oracle::random_ordering(rng, g);
        auto blue_target = oracle::random_ordering(rng, g);
        auto result = adversary_coloring(host, red_target, blue_target);
        CHECK(result.arrows == brute_force_arrows(host, red_target, blue_target));
        if (result.witness)
            CHECK(is_bad_coloring(host, red_target, blue_target, *result.witness));
    }
}

TEST_CASE("more than two colours")
{
    auto k3 = Graph::complete(3);
    auto three = adversary_coloring(Graph::complete(5), k3, k3, 3);
    REQUIRE(! three.arrows);
    CHECK(three.witness->k == 3);
    CHECK(is_bad_coloring(Graph::complete(5), k3, k3, *three.witness));
    Graph edge(2, {{0, 1}});
    CHECK(adversary_coloring(Graph::complete(3), edge, edge, 3).arrows);
    CHECK_THROWS_AS(adversary_coloring(Graph::complete(5), k3, Graph(3, {{0, 1}, {1, 2}}), 3), Error);
}

TEST_CASE("results do not depend on the thread count or the cache")
{
    auto target = edge_monotone_path(4);
    auto one = lex_ramsey(target, std::nullopt, 6);
    SearchOptions threaded;
    threaded.threads = 3;
    auto many = lex_ramsey(target, std::nullopt, 6, threaded);
    CHECK(one.value == many.value);
    REQUIRE(one.lower_certificates.size() == many.lower_certificates.size());
    for (std::size_t i = 0 ; i < one.lower_certificates.size() ; ++i)
        CHECK(one.lower_certificates[i].coloring == many.lower_certificates[i].coloring);

    auto dir = std::filesystem::temp_directory_path() / "eoram-test-cache";
    std::filesystem::remove_all(dir);
    SearchOptions cached;
    cached.cache_dir = dir.string();
    auto first = classic_ramsey(Graph::complete(3), std::nullopt, 6, cached);
    CHECK(! std::filesystem::is_empty(dir));
    auto second = classic_ramsey(Graph::complete(3), std::nullopt, 6, cached);
    CHECK(first.value == 6);
    CHECK(second.value == 6);
    CHECK(first.lower_certificates.back().coloring == second.lower_certificates.back().coloring);
    std::filesystem::remove_all(dir);
}

TEST_CASE("lexicographic number against the consistent-map vertex orderings")
{
    auto report = verify_lemma4(edge_monotone_path(3), 6);
    CHECK(report.status == Lemma4Status::Holds);
    CHECK(report.lex.value == 3);
    CHECK(! report.maps.empty());
}
