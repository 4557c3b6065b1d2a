#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace eoram
{
    /// A vertex bijection f: V -> {0..n-1}, stored as f[v].
    using VertexMap = std::vector<int>;

    auto lex_complete(int n) -> EdgeOrderedGraph;

    /// Edges sorted by (min f-endpoint, max f-endpoint).
    auto lex_ordering(const Graph & g, const VertexMap & f) -> EdgeOrderedGraph;

    /// Same interval order as lex_ordering, with each per-minimum-vertex interval reversed.
    auto max_lex_ordering(const Graph & g, const VertexMap & f) -> EdgeOrderedGraph;

    auto inverse_ordering(const EdgeOrderedGraph & g) -> EdgeOrderedGraph;

    /// K_{a,b} with parts {0..a-1} and {a..a+b-1}, ordered by (left, right).
    auto lex_bipartite(int a, int b) -> EdgeOrderedGraph;

    /// Path 0-1-...-(n-1) with edges increasing along the path.
    auto edge_monotone_path(int n) -> EdgeOrderedGraph;

    /// n/2 disjoint edges {0,1}, {2,3}, ... in sorted order.
    auto matching(int n) -> EdgeOrderedGraph;

    /// K_{1,leaves} with centre 0.
    auto star(int leaves) -> EdgeOrderedGraph;

    struct DegeneracyOrder
    {
        int d = 0;
        std::vector<int> order;
    };

    /// Reverse of repeated minimum-degree removal (ties to the lowest label); each vertex then has
    /// at most d neighbours earlier in the order.
    auto degeneracy_order(const Graph & g) -> DegeneracyOrder;

    /// Produces the ordering placed on the K_{s,s} between blocks I_i and I_j (i < j). Left part
    /// {0..s-1} is I_i and right part {s..2s-1} is I_j, both in increasing host label order.
    using BridgeGenerator = std::function<EdgeOrderedGraph (int block_size, int i, int j)>;

    auto lexicographic_bridge() -> BridgeGenerator;
    auto fixed_bridge(EdgeOrderedGraph bridge) -> BridgeGenerator;
    auto random_bridge(std::uint64_t seed) -> BridgeGenerator;

    struct BlowUp
    {
        EdgeOrderedGraph host;
        std::vector<std::vector<int>> partition;
    };

    /// Blow-up of a complete edge-ordered base: inter-block edges in contiguous rank blocks ordered
    /// like the base edges, bridge order inside each block, then intra-block edges lexicographically.
    /// Throws InvalidBase unless the base is complete.
    auto blow_up(const EdgeOrderedGraph & base, int block_size, const BridgeGenerator & bridge) -> BlowUp;

    inline constexpr int default_consistent_limit = 10;

    /// Every vertex bijection whose lexicographic rule reproduces g's edge order, in lexicographic
    /// order of the map. Throws LimitExceeded for n above the limit.
    auto consistent_maps(const EdgeOrderedGraph & g, int limit = default_consistent_limit) -> std::vector<VertexMap>;

    auto is_consistent(const EdgeOrderedGraph & g, const VertexMap & f) -> bool;

    auto is_lexicographic(const EdgeOrderedGraph & g, int limit = default_consistent_limit) -> bool;
}
