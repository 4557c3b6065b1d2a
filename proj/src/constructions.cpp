#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/rng.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

using std::string;
using std::to_string;
using std::vector;

namespace eoram
{
    namespace
    {
        auto check_bijection(const VertexMap & f, int n) -> void
        {
            if (static_cast<int>(f.size()) != n)
                raise(ErrorKind::InvalidArgument, "vertex map has wrong length");
            vector<char> seen(n, 0);
            for (int x : f) {
                if (x < 0 || x >= n || seen[x])
                    raise(ErrorKind::InvalidArgument, "vertex map is not a bijection");
                seen[x] = 1;
            }
        }

        template <typename Key_>
        auto order_by(const Graph & g, Key_ key) -> EdgeOrderedGraph
        {
            vector<int> by_rank(g.m());
            std::iota(by_rank.begin(), by_rank.end(), 0);
            std::sort(by_rank.begin(), by_rank.end(), [&] (int a, int b) { return key(g.edge(a)) < key(g.edge(b)); });
            vector<int> rank(g.m());
            for (int r = 0 ; r < g.m() ; ++r)
                rank[by_rank[r]] = r;
            return EdgeOrderedGraph(g, std::move(rank));
        }

        auto identity(int n) -> vector<int>
        {
            vector<int> id(n);
            std::iota(id.begin(), id.end(), 0);
            return id;
        }
    }

    auto lex_complete(int n) -> EdgeOrderedGraph
    {
        if (n < 1)
            raise(ErrorKind::InvalidArgument, "lex_complete needs n >= 1");
        auto g = Graph::complete(n);
        return EdgeOrderedGraph(g, identity(g.m()));
    }

    auto lex_ordering(const Graph & g, const VertexMap & f) -> EdgeOrderedGraph
    {
        check_bijection(f, g.n());
        return order_by(g, [&] (const Edge & e) {
            return std::pair{std::min(f[e.u], f[e.v]), std::max(f[e.u], f[e.v])};
        });
    }

    auto max_lex_ordering(const Graph & g, const VertexMap & f) -> EdgeOrderedGraph
    {
        check_bijection(f, g.n());
        return order_by(g, [&] (const Edge & e) {
            return std::pair{std::min(f[e.u], f[e.v]), -std::max(f[e.u], f[e.v])};
        });
    }

    auto inverse_ordering(const EdgeOrderedGraph & g) -> EdgeOrderedGraph
    {
        vector<int> rank(g.m());
        for (int e = 0 ; e < g.m() ; ++e)
            rank[e] = g.m() - 1 - g.rank(e);
        return EdgeOrderedGraph(g.graph(), std::move(rank));
    }

    auto lex_bipartite(int a, int b) -> EdgeOrderedGraph
    {
        if (a < 1 || b < 1)
            raise(ErrorKind::InvalidArgument, "lex_bipartite needs both parts non-empty");
        auto g = Graph::complete_bipartite(a, b);
        return EdgeOrderedGraph(g, identity(g.m()));
    }

    auto edge_monotone_path(int n) -> EdgeOrderedGraph
    {
        if (n < 2)
            raise(ErrorKind::InvalidArgument, "edge_monotone_path needs n >= 2");
        vector<Edge> seq;
        for (int v = 0 ; v + 1 < n ; ++v)
            seq.push_back({v, v + 1});
        return EdgeOrderedGraph::from_sequence(n, seq);
    }

    auto matching(int n) -> EdgeOrderedGraph
    {
        if (n < 2 || n % 2 != 0)
            raise(ErrorKind::InvalidArgument, "matching needs an even n >= 2");
        vector<Edge> seq;
        for (int v = 0 ; v < n ; v += 2)
            seq.push_back({v, v + 1});
        return EdgeOrderedGraph::from_sequence(n, seq);
    }

    auto star(int leaves) -> EdgeOrderedGraph
    {
        if (leaves < 1)
            raise(ErrorKind::InvalidArgument, "star needs at least one leaf");
        vector<Edge> seq;
        for (int v = 1 ; v <= leaves ; ++v)
            seq.push_back({0, v});
        return EdgeOrderedGraph::from_sequence(leaves + 1, seq);
    }

    auto degeneracy_order(const Graph & g) -> DegeneracyOrder
    {
        vector<int> degree(g.n());
        for (int v = 0 ; v < g.n() ; ++v)
            degree[v] = g.degree(v);
        vector<char> removed(g.n(), 0);

        DegeneracyOrder result;
        vector<int> removal;
        for (int step = 0 ; step < g.n() ; ++step) {
            int best = -1;
            for (int v = 0 ; v < g.n() ; ++v)
                if (! removed[v] && (best == -1 || degree[v] < degree[best]))
                    best = v;
            result.d = std::max(result.d, degree[best]);
            removed[best] = 1;
            removal.push_back(best);
            for (int w : g.neighbours(best))
                if (! removed[w])
                    --degree[w];
        }

        result.order.assign(removal.rbegin(), removal.rend());
        return result;
    }

    auto lexicographic_bridge() -> BridgeGenerator
    {
        return [] (int s, int, int) { return lex_bipartite(s, s); };
    }

    auto fixed_bridge(EdgeOrderedGraph bridge) -> BridgeGenerator
    {
        return [bridge = std::move(bridge)] (int, int, int) { return bridge; };
    }

    auto random_bridge(std::uint64_t seed) -> BridgeGenerator
    {
        return [seed] (int s, int i, int j) {
            auto g = Graph::complete_bipartite(s, s);
            vector<int> rank = identity(g.m());
            Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i) * 65536u + static_cast<std::uint64_t>(j)));
            rng.shuffle(std::span<int>(rank));
            return EdgeOrderedGraph(std::move(g), std::move(rank));
        };
    }

    auto blow_up(const EdgeOrderedGraph & base, int block_size, const BridgeGenerator & bridge) -> BlowUp
    {
        int parts = base.n();
        if (base.m() != parts * (parts - 1) / 2)
            raise(ErrorKind::InvalidBase, "blow-up base must be a complete graph");
        if (block_size < 1)
            raise(ErrorKind::InvalidArgument, "block size must be positive");

        int s = block_size;
        int n = parts * s;
        auto block_graph = Graph::complete_bipartite(s, s);

        vector<Edge> seq;
        seq.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int r = 0 ; r < base.m() ; ++r) {
            auto [i, j] = base.graph().edge(base.edge_at_rank(r));
            auto ordering = bridge(s, i, j);
            if (! (ordering.graph() == block_graph))
                raise(ErrorKind::InvalidArgument, "bridge ordering is not on K_{" + to_string(s) + "," + to_string(s) + "}");
            for (const auto & e : ordering.sequence())
                seq.push_back({i * s + e.u, j * s + (e.v - s)});
        }
        for (int i = 0 ; i < parts ; ++i)
            for (int a = 0 ; a < s ; ++a)
                for (int b = a + 1 ; b < s ; ++b)
                    seq.push_back({i * s + a, i * s + b});
        std::stable_sort(seq.begin() + base.m() * s * s, seq.end());

        BlowUp result{EdgeOrderedGraph::from_sequence(n, seq), {}};
        for (int i = 0 ; i < parts ; ++i) {
            vector<int> block(s);
            std::iota(block.begin(), block.end(), i * s);
            result.partition.push_back(std::move(block));
        }
        return result;
    }

    auto is_consistent(const EdgeOrderedGraph & g, const VertexMap & f) -> bool
    {
        if (static_cast<int>(f.size()) != g.n())
            return false;
        auto key = [&] (int r) {
            const auto & e = g.graph().edge(g.edge_at_rank(r));
            return std::pair{std::min(f[e.u], f[e.v]), std::max(f[e.u], f[e.v])};
        };
        for (int r = 0 ; r + 1 < g.m() ; ++r)
            if (! (key(r) < key(r + 1)))
                return false;
        return true;
    }

    auto consistent_maps(const EdgeOrderedGraph & g, int limit) -> vector<VertexMap>
    {
        if (g.n() > limit)
            raise(ErrorKind::LimitExceeded, "consistent_maps needs n <= " + to_string(limit));
        vector<VertexMap> result;
        auto f = identity(g.n());
        do {
            if (is_consistent(g, f))
                result.push_back(f);
        } while (std::next_permutation(f.begin(), f.end()));
        return result;
    }

    auto is_lexicographic(const EdgeOrderedGraph & g, int limit) -> bool
    {
        if (g.n() > limit)
            raise(ErrorKind::LimitExceeded, "is_lexicographic needs n <= " + to_string(limit));
        auto f = identity(g.n());
        do {
            if (is_consistent(g, f))
                return true;
        } while (std::next_permutation(f.begin(), f.end()));
        return false;
    }
}
