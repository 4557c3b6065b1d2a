#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/paramwords.hpp>
#include <eoram/rng.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace eoram;
using std::string;
using std::vector;

namespace
{
    /// Every token string over the alphabet and L1..Lt whose parameters all occur with first
    /// occurrences in index order, by filtering all (a + t)^length strings.
    auto brute_force_words(int length, int t, int alphabet_size) -> std::set<vector<string>>
    {
        int base = alphabet_size + t;
        std::set<vector<string>> result;
        long long total = 1;
        for (int i = 0 ; i < length ; ++i)
            total *= base;
        for (long long code = 0 ; code < total ; ++code) {
            vector<string> tokens;
            long long c = code;
            int next = 1;
            bool ok = true;
            for (int i = 0 ; i < length ; ++i, c /= base) {
                int s = static_cast<int>(c % base);
                if (s < alphabet_size) {
                    tokens.push_back(std::to_string(s));
                    continue;
                }
                int j = s - alphabet_size + 1;
                if (j > next)
                    ok = false;
                if (j == next)
                    ++next;
                tokens.push_back("L" + std::to_string(j));
            }
            if (ok && next == t + 1)
                result.insert(tokens);
        }
        return result;
    }

    auto stirling2(int n, int k) -> long long
    {
        vector<vector<long long>> s(n + 1, vector<long long>(k + 1, 0));
        s[0][0] = 1;
        for (int i = 1 ; i <= n ; ++i)
            for (int j = 1 ; j <= k ; ++j)
                s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
        return s[n][k];
    }

    auto witness_word() -> ParameterWord
    {
        return ParameterWord::parse({"0"}, 5, {"L1", "L2", "0", "L3", "0", "L4", "0", "L5", "0"});
    }
}

TEST_CASE("word validation")
{
    CHECK_NOTHROW(ParameterWord::parse({"0"}, 2, {"0", "L1", "L1", "L2"}));
    CHECK_THROWS_AS(ParameterWord::parse({"0"}, 2, {"L2", "L1"}), Error);
    CHECK_THROWS_AS(ParameterWord::parse({"0"}, 2, {"L1", "0"}), Error);
    CHECK_THROWS_AS(ParameterWord::parse({"0"}, 1, {"x"}), Error);
    CHECK_THROWS_AS(ParameterWord::parse({"Lx"}, 1, {"L1"}), Error);
    CHECK_THROWS_AS(ParameterWord::parse({"0"}, 1, {"L1x"}), Error);

    auto w = ParameterWord::parse({"0", "1"}, 2, {"1", "L1", "0", "L2", "L1"});
    CHECK(w.blocks() == vector<Subset>{{2, 5}, {4}});
    CHECK(w.to_string() == "1 L1 0 L2 L1");
    CHECK(w.at(1) == Symbol::letter(1));
    CHECK(w.at(5) == Symbol::lambda(1));
}

TEST_CASE("composition")
{
    auto f = ParameterWord::parse({"0"}, 3, {"L1", "0", "L2", "L3", "L2"});
    auto g = ParameterWord::parse({"0"}, 2, {"L1", "0", "L2"});
    auto fg = compose(f, g);
    CHECK(fg.tokens() == vector<string>{"L1", "0", "0", "L2", "0"});
    CHECK(compose(f, ParameterWord::identity(3)) == f);
    CHECK(compose(ParameterWord::identity(5), f) == f);
    CHECK_THROWS_AS(compose(f, ParameterWord::identity(2)), Error);
    CHECK_THROWS_AS(compose(f, ParameterWord::parse({"1"}, 3, {"L1", "L2", "L3"})), Error);

    // Associativity over every triple from small enumerations.
    auto outer = enumerate_words(5, 3);
    auto middle = enumerate_words(3, 2);
    auto inner = enumerate_words(2, 1);
    for (const auto & a : outer)
        for (const auto & b : middle)
            for (const auto & c : inner)
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("word enumeration matches brute force")
{
    for (int length = 0 ; length <= 6 ; ++length)
        for (int t = 0 ; t <= 3 ; ++t)
            for (int a = 1 ; a <= 2 ; ++a) {
                std::set<vector<string>> listed;
                for (const auto & w : enumerate_words(length, t, a))
                    listed.insert(w.tokens());
                CHECK(listed == brute_force_words(length, t, a));
            }
    // With one letter, t-parameter words of length N are set partitions of N + 1 into t + 1 blocks.
    for (int length = 3 ; length <= 8 ; ++length)
        CHECK(static_cast<long long>(enumerate_words(length, 3).size()) == stirling2(length + 1, 4));
    CHECK_THROWS_AS(enumerate_words(11, 3), Error);
}

TEST_CASE("three-parameter words as edges")
{
    auto w = ParameterWord::parse({"0"}, 3, {"L1", "L2", "L3", "0"});
    auto [x, y] = word_to_edge(w);
    CHECK(x == Subset{1, 3});
    CHECK(y == Subset{2, 3});
    CHECK_THROWS_AS(word_to_edge(ParameterWord::identity(2)), Error);
}

TEST_CASE("subset host")
{
    SubsetHost host(4);
    CHECK(host.vertex_count() == 16);
    CHECK(host.vertex_at(15) == Subset{});
    CHECK(host.vertex_at(0) == Subset{1});
    CHECK(host.vertex_at(1) == Subset{1, 2});
    for (int r = 1 ; r < 15 ; ++r)
        CHECK(host.vertex_at(r - 1) < host.vertex_at(r));

    int intersecting = 0;
    for (unsigned a = 1 ; a < 16 ; ++a)
        for (unsigned b = a + 1 ; b < 16 ; ++b)
            intersecting += (a & b) != 0;
    CHECK(host.edge_count() == intersecting);

    auto key = [&] (int e) {
        auto [x, y] = host.edge(e);
        Subset common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        return std::tuple{common.front(), host.vertex_rank(x), host.vertex_rank(y)};
    };
    for (int e = 0 ; e < host.edge_count() ; ++e) {
        auto [x, y] = host.edge(e);
        CHECK(host.vertex_rank(x) < host.vertex_rank(y));
        CHECK(host.edge_index(x, y) == e);
        CHECK(host.edge_index(y, x) == e);
        if (e > 0)
            CHECK(key(e - 1) < key(e));
    }
    CHECK(host.edge_index({1}, {2}) == -1);
    CHECK(host.edge_index({1}, {1}) == -1);
    CHECK_THROWS_AS(SubsetHost(13), Error);
}

TEST_CASE("colour translation to words")
{
    SubsetHost host(5);
    auto constant = translate_coloring(host, Coloring::constant(host.edge_count(), 1));
    CHECK(static_cast<long long>(constant.words.size()) == stirling2(6, 4));
    CHECK(std::all_of(constant.colors.begin(), constant.colors.end(), [] (int c) { return c == 1; }));

    auto parity = parity_coloring(host);
    auto translated = translate_coloring(host, parity);
    for (std::size_t i = 0 ; i < translated.words.size() ; ++i) {
        // The common part of the two sets is S_3, so the colour is the parity of its minimum.
        int low = translated.words[i].blocks()[2].front();
        CHECK(translated.colors[i] == (low % 2 == 0 ? 0 : 1));
    }
    CHECK_THROWS_AS(translate_coloring(SubsetHost(11), Coloring::constant(SubsetHost(11).edge_count(), 0)), Error);
}

TEST_CASE("extracting the copy and selecting edges")
{
    auto f = BiOrderedGraph::natural(edge_monotone_path(3));
    auto w = witness_word();
    auto sets = extract_F_star(w, f);
    // Blocks are {1}, {2}, {4}, {6}, {8}; f_1 = {v1, v2} uses S_4 and f_2 = {v2, v3} uses S_5.
    CHECK(sets == vector<Subset>{{1, 6}, {2, 6, 8}, {4, 8}});

    for (auto [i, j, l] : {std::tuple{1, 2, 1}, std::tuple{2, 3, 2}}) {
        auto v = build_edge_selector(w, f, i, j, l);
        CHECK(v.parameters() == 3);
        auto blocks = compose(w, v).blocks();
        auto s = w.blocks()[f.n() + l - 1];
        Subset left, right;
        std::set_difference(sets[i - 1].begin(), sets[i - 1].end(), s.begin(), s.end(), std::back_inserter(left));
        std::set_difference(sets[j - 1].begin(), sets[j - 1].end(), s.begin(), s.end(), std::back_inserter(right));
        CHECK(blocks == vector<Subset>{left, right, s});
    }
    CHECK_THROWS_AS(build_edge_selector(w, f, 1, 3, 1), Error);
    CHECK_THROWS_AS(extract_F_star(ParameterWord::identity(4), f), Error);
}

TEST_CASE("induced monochromatic copy from a witness word")
{
    SubsetHost host(9);
    auto f = BiOrderedGraph::natural(edge_monotone_path(3));
    auto w = witness_word();
    auto chi = parity_coloring(host);

    auto report = verify_theorem8_witness(host, f, w, chi);
    CHECK(report.all_pass());
    CHECK(report.color == 0);

    auto flipped = chi;
    flipped.colors[host.edge_index(report.sets[0], report.sets[1])] ^= 1;
    CHECK_THROWS_AS(verify_theorem8_witness(host, f, w, flipped), Error);
    auto lenient = verify_theorem8_witness(host, f, w, flipped, false);
    CHECK(! lenient.precondition);
    CHECK(! lenient.monochromatic);
    CHECK(lenient.vertex_order);
    CHECK(lenient.induced_edges);
    CHECK(lenient.edge_order);

    auto swapped = BiOrderedGraph::natural(EdgeOrderedGraph(f.graph.graph(), {1, 0}));
    auto permuted = check_induced_copy(host, f, extract_F_star(w, swapped), chi);
    CHECK(! permuted.edge_order);
    CHECK(permuted.vertex_order);
    CHECK(permuted.induced_edges);
    CHECK(permuted.monochromatic);

    // Adding a set that meets v1 and v3 adds an edge the path does not have.
    auto extra = report.sets;
    extra[2].push_back(1);
    std::sort(extra[2].begin(), extra[2].end());
    CHECK(! check_induced_copy(host, f, extra, chi).induced_edges);

    Rng rng(61);
    vector<int> colors(host.edge_count());
    for (auto & c : colors)
        c = static_cast<int>(rng.below(2));
    CHECK(! verify_theorem8_witness(host, f, w, Coloring(2, colors), false).precondition);
}
