#pragma once

// Brute-force helpers shared by the unit tests. They use nothing from the library beyond the
// graph containers, so they can stand as independent oracles.

#include <eoram/graph.hpp>
#include <eoram/rng.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle
{
    using eoram::Edge;
    using eoram::EdgeOrderedGraph;
    using eoram::Graph;

    inline auto identity(int n) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    /// Edge sequence of g after relabelling v to perm[v], each pair written low-high.
    inline auto relabelled_sequence(const EdgeOrderedGraph & g, const std::vector<int> & perm) -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (auto e : g.sequence())
            out.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
        return out;
    }

    inline auto isomorphic(const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) -> bool
    {
        if (a.n() != b.n() || a.m() != b.m())
            return false;
        auto target = b.sequence();
        auto perm = identity(a.n());
        do {
            if (relabelled_sequence(a, perm) == target)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    /// Whether sorting the edges by (min f, max f) reproduces the order for some bijection f.
    inline auto lexicographic(const EdgeOrderedGraph & g) -> bool
    {
        auto perm = identity(g.n());
        auto sequence = g.sequence();
        do {
            auto key = [&] (Edge e) {
                return std::pair{std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])};
            };
            bool ok = true;
            for (std::size_t i = 1 ; i < sequence.size() && ok ; ++i)
                ok = key(sequence[i - 1]) < key(sequence[i]);
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    inline auto random_graph(eoram::Rng & rng, int n, int numerator, int denominator) -> Graph
    {
        std::vector<Edge> edges;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (static_cast<int>(rng.below(denominator)) < numerator)
                    edges.push_back({u, v});
        return Graph(n, edges);
    }

    inline auto random_ordering(eoram::Rng & rng, const Graph & g) -> EdgeOrderedGraph
    {
        auto rank = identity(g.m());
        rng.shuffle(std::span<int>(rank));
        return EdgeOrderedGraph(g, rank);
    }

    inline auto random_vertex_order(eoram::Rng & rng, const Graph & g) -> eoram::VertexOrderedGraph
    {
        auto rank = identity(g.n());
        rng.shuffle(std::span<int>(rank));
        return eoram::VertexOrderedGraph(g, rank);
    }

    inline auto factorial(int n) -> long long
    {
        long long f = 1;
        for (int i = 2 ; i <= n ; ++i)
            f *= i;
        return f;
    }
}
