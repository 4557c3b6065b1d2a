#include "oracles.hpp"

#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/io.hpp>
#include <eoram/probabilistic.hpp>
#include <eoram/verify.hpp>

#include <doctest.h>
#include <gmpxx.h>

#include <cmath>
#include <set>

using namespace eoram;
using std::vector;

namespace
{
    /// Containment probability by trying every rank assignment and every vertex injection.
    auto exact_by_hand(const EdgeOrderedGraph & pattern, const Graph & host) -> std::pair<long long, long long>
    {
        auto rank = oracle::identity(host.m());
        long long hits = 0, total = 0;
        do {
            ++total;
            hits += naive_has_copy(pattern, EdgeOrderedGraph(host, rank));
        } while (std::next_permutation(rank.begin(), rank.end()));
        return {hits, total};
    }

    /// Sign of C(M,t)^2 - exp(x) for x = t^2 / (3 n^2 m!) with exact rationals: exp(x) is bracketed by
    /// Taylor partial sums and a geometric tail bound until the bracket excludes C(M,t)^2.
    auto oracle_feasible(int n, int m, int t, int big_m) -> bool
    {
        mpz_class binomial;
        mpz_bin_uiui(binomial.get_mpz_t(), big_m, t);
        mpz_class square = binomial * binomial;
        mpz_class factorial;
        mpz_fac_ui(factorial.get_mpz_t(), m);
        mpq_class x(mpz_class(t) * t, mpz_class(3) * n * n * factorial);
        x.canonicalize();

        mpq_class sum = 0, term = 1;
        for (int k = 0 ; k < 100000 ; ++k) {
            sum += term;
            term = term * x / (k + 1);
            // Remaining tail <= term / (1 - x/(k+2)) once x < k + 2.
            if (x < k + 2) {
                mpq_class tail = term / (1 - x / (k + 2));
                if (square < sum)
                    return true;
                if (square > sum + tail)
                    return false;
            }
        }
        throw std::logic_error("oracle did not separate");
    }
}

TEST_CASE("random edge orderings are seeded permutations")
{
    auto g = Graph::complete(6);
    auto a = random_edge_ordering(g, 7);
    auto b = random_edge_ordering(g, 7);
    CHECK(a == b);
    CHECK(! (a == random_edge_ordering(g, 8)));
    std::set<int> ranks(a.ranks().begin(), a.ranks().end());
    CHECK(static_cast<int>(ranks.size()) == g.m());
}

TEST_CASE("exact containment probabilities")
{
    auto k22 = Graph::complete_bipartite(2, 2);
    auto k23 = Graph::complete_bipartite(2, 3);
    for (const auto & [pattern, host] : {std::pair{edge_monotone_path(3), k22}, std::pair{matching(4), k22},
            std::pair{lex_bipartite(2, 2), k22}, std::pair{edge_monotone_path(4), k22},
            std::pair{edge_monotone_path(4), k23}, std::pair{star(2), k23}}) {
        auto exact = containment_probability_exact(pattern, host);
        auto [hits, total] = exact_by_hand(pattern, host);
        CHECK(exact.numerator * total == hits * exact.denominator);
        CHECK(std::gcd(exact.numerator, exact.denominator) == 1);
        if (hits > 0)
            CHECK(exact.value() >= 1.0 / oracle::factorial(pattern.m()) - 1e-15);
    }
    auto lex = containment_probability_exact(lex_bipartite(2, 2), k22);
    CHECK(lex.numerator == 1);
    CHECK(lex.denominator == 3);
    auto none = containment_probability_exact(lex_complete(3), k22);
    CHECK(none.numerator == 0);
    CHECK_THROWS_AS(containment_probability_exact(edge_monotone_path(3), Graph::complete_bipartite(3, 3)), Error);
}

TEST_CASE("Monte-Carlo estimates")
{
    auto k22 = Graph::complete_bipartite(2, 2);
    auto pattern = lex_bipartite(2, 2);
    auto a = containment_probability_mc(pattern, k22, 20'000, 5, 1);
    auto b = containment_probability_mc(pattern, k22, 20'000, 5, 3);
    CHECK(a.hits == b.hits);
    CHECK(a.trials == 20'000);
    double se = std::sqrt(a.p * (1 - a.p) / a.trials);
    CHECK(a.standard_error == doctest::Approx(se).epsilon(1e-9));
    CHECK(std::fabs(a.p - 1.0 / 3) <= 4 * a.standard_error);
    CHECK_THROWS_AS(containment_probability_mc(pattern, k22, 0, 1), Error);
}

TEST_CASE("biclique decomposition partitions the edges")
{
    auto blocks = decompose_biclique(6, 2);
    CHECK(blocks.size() == 9);
    std::set<std::pair<int, int>> edges;
    for (const auto & b : blocks) {
        CHECK(b.left.size() == 2);
        CHECK(b.right.size() == 2);
        for (int x : b.left)
            for (int y : b.right) {
                CHECK(x < 6);
                CHECK(y >= 6);
                CHECK(edges.insert({x, y}).second);
            }
    }
    CHECK(edges.size() == 36);
    CHECK_THROWS_AS(decompose_biclique(5, 2), Error);
}

TEST_CASE("biclique saturation")
{
    auto host = lex_bipartite(3, 3);
    for (const auto & pattern : {edge_monotone_path(3), lex_bipartite(2, 2), matching(4)}) {
        auto result = check_biclique_saturation(host, pattern, 2);
        bool expected = true;
        for (int l = 0 ; l < 8 ; ++l)
            for (int r = 0 ; r < 8 ; ++r) {
                if (std::popcount(unsigned(l)) != 2 || std::popcount(unsigned(r)) != 2)
                    continue;
                vector<int> vertices;
                for (int i = 0 ; i < 3 ; ++i)
                    if (l >> i & 1)
                        vertices.push_back(i);
                for (int i = 0 ; i < 3 ; ++i)
                    if (r >> i & 1)
                        vertices.push_back(3 + i);
                expected = expected && naive_has_copy(pattern, restrict(host, vertices));
            }
        CHECK(result.saturated == expected);
        CHECK(result.violation.has_value() == ! expected);
    }
    CHECK_THROWS_AS(check_biclique_saturation(lex_complete(4), edge_monotone_path(3), 2), Error);
    CHECK_THROWS_AS(check_biclique_saturation(host, edge_monotone_path(3), 2, 3), Error);

    auto found = search_saturating_ordering(3, edge_monotone_path(3), 2, 5, 1);
    REQUIRE(found);
    io::json cert = {{"kind", "saturation"}, {"host", io::to_json(*found)}, {"pattern", io::to_json(edge_monotone_path(3))}, {"t", 2}};
    CHECK(verify_certificate_json(cert).ok);
}

TEST_CASE("feasibility inequality against an exact rational oracle")
{
    for (int n = 1 ; n <= 3 ; ++n)
        for (int m = 1 ; m <= 4 ; ++m)
            for (int t = 1 ; t <= 12 ; ++t)
                for (int big_m = t ; big_m <= 20 ; big_m += 3) {
                    CAPTURE(n);
                    CAPTURE(m);
                    CAPTURE(t);
                    CAPTURE(big_m);
                    CHECK(lemma9_feasible(n, m, t, big_m).feasible == oracle_feasible(n, m, t, big_m));
                }

    auto far = lemma9_feasible(2, 2, 20, 40);
    CHECK(! far.feasible);
    CHECK(static_cast<double>(far.margin) == doctest::Approx(34.63).epsilon(1e-3));
    CHECK(lemma9_feasible(2, 2, 41, 40).feasible);

    // C(M,M) = 1 leaves a margin of about -1/m!, far below double resolution.
    auto tiny = lemma9_feasible(1, 100, 5, 5);
    CHECK(tiny.feasible);
    CHECK(tiny.high_precision);
    CHECK_THROWS_AS(lemma9_feasible(1, 4000, 5, 5), Error);
    CHECK_THROWS_AS(lemma9_feasible(0, 1, 1, 1), Error);
}
