#include <eoram/error.hpp>
#include <eoram/greedy.hpp>
#include <eoram/rng.hpp>

#include <doctest.h>

#include <set>

using namespace eoram;
using std::vector;

namespace
{
    auto path3() -> Graph { return Graph(3, {{0, 1}, {1, 2}}); }

    /// Certificate check written from the definitions, independent of verify_certificate.
    auto independent_check(const GreedyInstance & instance, const Coloring & c, const GreedyCertificate & certificate) -> bool
    {
        auto host = Graph::complete(instance.host_n);
        auto color = [&] (int x, int y) { return c[host.edge_index(x, y)]; };
        if (auto copy = std::get_if<BlueCopy>(&certificate)) {
            const auto & h = copy->vertex_map;
            if (static_cast<int>(h.size()) != instance.pattern.n())
                return false;
            for (std::size_t i = 0 ; i < instance.order.size() ; ++i) {
                const auto & part = instance.parts[i];
                if (std::find(part.begin(), part.end(), h[instance.order[i]]) == part.end())
                    return false;
            }
            for (auto e : instance.pattern.edges())
                if (color(h[e.u], h[e.v]) != blue)
                    return false;
            return true;
        }
        const auto & b = std::get<RedBiclique>(certificate);
        if (b.left_part == b.right_part || static_cast<int>(b.left.size()) != instance.t || static_cast<int>(b.right.size()) != instance.t)
            return false;
        std::set<int> left_part(instance.parts[b.left_part].begin(), instance.parts[b.left_part].end());
        std::set<int> right_part(instance.parts[b.right_part].begin(), instance.parts[b.right_part].end());
        for (int x : b.left) {
            if (! left_part.count(x))
                return false;
            for (int y : b.right)
                if (! right_part.count(y) || color(x, y) != red)
                    return false;
        }
        return true;
    }
}

TEST_CASE("instance sizes")
{
    auto instance = host_for(path3(), 2);
    CHECK(instance.d == 1);
    CHECK(instance.host_n == 36);
    REQUIRE(instance.parts.size() == 3);
    for (const auto & part : instance.parts)
        CHECK(part.size() == 12);
    validate_instance(instance);

    auto k3 = host_for(Graph::complete(3), 1);
    CHECK(k3.d == 2);
    CHECK(k3.host_n == 9);

    CHECK_THROWS_AS(host_for(path3(), 0), Error);
    auto broken = instance;
    broken.parts[0].pop_back();
    CHECK_THROWS_AS(validate_instance(broken), Error);
}

TEST_CASE("constant colourings")
{
    auto instance = host_for(path3(), 2);
    int m = 36 * 35 / 2;
    auto red_result = greedy_embed(instance, Coloring::constant(m, red));
    REQUIRE(std::holds_alternative<RedBiclique>(red_result));
    CHECK(std::get<RedBiclique>(red_result).left_part == 0);
    CHECK(verify_certificate(instance, Coloring::constant(m, red), red_result));

    auto blue_result = greedy_embed(instance, Coloring::constant(m, blue));
    CHECK(std::holds_alternative<BlueCopy>(blue_result));
    CHECK(verify_certificate(instance, Coloring::constant(m, blue), blue_result));
}

TEST_CASE("random colourings always yield valid certificates")
{
    for (auto [pattern, t] : {std::pair{path3(), 2}, std::pair{Graph::complete(3), 1}, std::pair{Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 1}}) {
        auto instance = host_for(pattern, t);
        int m = instance.host_n * (instance.host_n - 1) / 2;
        int bicliques = 0;
        for (int trial = 0 ; trial < 100 ; ++trial) {
            Rng rng(derive_seed(99, trial));
            // Skew the red density so both outcomes occur.
            int red_share = 1 + trial % 9;
            vector<int> colors(m);
            for (auto & c : colors)
                c = static_cast<int>(rng.below(10)) < red_share ? red : blue;
            Coloring coloring(2, colors);
            GreedyTrace trace;
            auto certificate = greedy_embed(instance, coloring, &trace);
            CHECK(verify_certificate(instance, coloring, certificate));
            CHECK(independent_check(instance, coloring, certificate));
            bicliques += std::holds_alternative<RedBiclique>(certificate);
            for (int u : trace.updates)
                CHECK(u <= instance.d);
        }
        CHECK(bicliques > 0);
    }
}

TEST_CASE("the verifier rejects tampered certificates")
{
    auto instance = host_for(path3(), 2);
    int m = 36 * 35 / 2;
    auto all_blue = Coloring::constant(m, blue);
    auto all_red = Coloring::constant(m, red);

    auto copy = std::get<BlueCopy>(greedy_embed(instance, all_blue));
    CHECK(! verify_certificate(instance, all_red, copy));
    auto moved = copy;
    moved.vertex_map[instance.order[0]] = instance.parts[1][0];
    CHECK(! verify_certificate(instance, all_blue, moved));

    auto biclique = std::get<RedBiclique>(greedy_embed(instance, all_red));
    CHECK(! verify_certificate(instance, all_blue, biclique));
    auto same_part = biclique;
    same_part.right_part = same_part.left_part;
    same_part.right = {instance.parts[same_part.left_part][10], instance.parts[same_part.left_part][11]};
    CHECK(! verify_certificate(instance, all_red, same_part));
    auto short_side = biclique;
    short_side.right.pop_back();
    CHECK(! verify_certificate(instance, all_red, short_side));
}
