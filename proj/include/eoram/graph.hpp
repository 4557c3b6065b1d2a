#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eoram
{
    /// An unordered pair of vertices, stored with u < v.
    struct Edge
    {
        int u = 0;
        int v = 0;

        auto operator<=>(const Edge &) const = default;
    };

    /// Simple undirected graph on vertices 0..n-1. Edges are kept sorted by (u, v) and an edge is
    /// identified by its position in that sorted sequence.
    class Graph
    {
        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<int> _index;
            std::vector<std::vector<int>> _neighbours;

        public:
            Graph() = default;

            /// Pairs may be given in either orientation and any order. Throws InvalidArgument on loops,
            /// duplicates or out-of-range endpoints.
            Graph(int n, std::vector<Edge> edges);

            static auto complete(int n) -> Graph;
            static auto complete_bipartite(int a, int b) -> Graph;

            auto n() const noexcept -> int { return _n; }
            auto m() const noexcept -> int { return static_cast<int>(_edges.size()); }
            auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
            auto edge(int index) const -> const Edge & { return _edges.at(index); }

            /// Index of the edge {u, v}, or -1.
            auto edge_index(int u, int v) const -> int
            {
                return _index[static_cast<std::size_t>(u) * _n + v];
            }

            auto has_edge(int u, int v) const -> bool { return edge_index(u, v) >= 0; }
            auto neighbours(int v) const -> const std::vector<int> & { return _neighbours.at(v); }
            auto degree(int v) const -> int { return static_cast<int>(_neighbours.at(v).size()); }

            auto operator==(const Graph & other) const -> bool
            {
                return _n == other._n && _edges == other._edges;
            }
    };

    /// A graph with a total order on its edges. rank[e] is the position of edge e in the order.
    class EdgeOrderedGraph
    {
        private:
            Graph _graph;
            std::vector<int> _rank;
            std::vector<int> _by_rank;

        public:
            EdgeOrderedGraph() = default;
            EdgeOrderedGraph(Graph graph, std::vector<int> rank);

            /// Builds the graph whose edge order is the given sequence (first = minimum).
            static auto from_sequence(int n, const std::vector<Edge> & in_order) -> EdgeOrderedGraph;

            auto graph() const noexcept -> const Graph & { return _graph; }
            auto n() const noexcept -> int { return _graph.n(); }
            auto m() const noexcept -> int { return _graph.m(); }
            auto rank(int edge_index) const -> int { return _rank.at(edge_index); }
            auto ranks() const noexcept -> const std::vector<int> & { return _rank; }
            auto edge_at_rank(int r) const -> int { return _by_rank.at(r); }

            /// Edges listed in increasing edge order.
            auto sequence() const -> std::vector<Edge>;

            auto operator==(const EdgeOrderedGraph & other) const -> bool
            {
                return _graph == other._graph && _rank == other._rank;
            }
    };

    /// A graph with a total order on its vertices. vrank[v] is the position of v.
    class VertexOrderedGraph
    {
        private:
            Graph _graph;
            std::vector<int> _vrank;
            std::vector<int> _by_vrank;

        public:
            VertexOrderedGraph() = default;
            VertexOrderedGraph(Graph graph, std::vector<int> vrank);

            /// The graph with the identity vertex order.
            static auto natural(Graph graph) -> VertexOrderedGraph;

            auto graph() const noexcept -> const Graph & { return _graph; }
            auto n() const noexcept -> int { return _graph.n(); }
            auto m() const noexcept -> int { return _graph.m(); }
            auto vrank(int v) const -> int { return _vrank.at(v); }
            auto vranks() const noexcept -> const std::vector<int> & { return _vrank; }
            auto vertex_at(int position) const -> int { return _by_vrank.at(position); }

            auto operator==(const VertexOrderedGraph & other) const -> bool
            {
                return _graph == other._graph && _vrank == other._vrank;
            }
    };

    /// An assignment of one of k colours to every host edge, indexed by host edge index.
    /// Colour 0 is red and colour 1 is blue.
    struct Coloring
    {
        int k = 2;
        std::vector<int> colors;

        Coloring() = default;
        Coloring(int k, std::vector<int> colors);

        static auto constant(int edge_count, int color, int k = 2) -> Coloring;

        auto size() const noexcept -> int { return static_cast<int>(colors.size()); }
        auto operator[](int e) const -> int { return colors[e]; }
        auto operator==(const Coloring &) const -> bool = default;
    };

    inline constexpr int red = 0;
    inline constexpr int blue = 1;

    /// vertex_map[p] is the host vertex of pattern vertex p; edge_map[e] the host edge of pattern edge e.
    struct Embedding
    {
        std::vector<int> vertex_map;
        std::vector<int> edge_map;

        auto operator==(const Embedding &) const -> bool = default;
    };

    /// Canonical isomorphism-class key of an edge-ordered graph.
    struct CanonicalKey
    {
        int n = 0;
        std::vector<Edge> sequence;

        auto operator<=>(const CanonicalKey &) const = default;
    };

    inline constexpr int default_canonical_limit = 10;

    auto are_isomorphic_eog(const EdgeOrderedGraph & a, const EdgeOrderedGraph & b) -> bool;

    /// Lexicographically least edge sequence over all vertex relabellings. Throws LimitExceeded if
    /// n > limit.
    auto canonical_form_eog(const EdgeOrderedGraph & g, int limit = default_canonical_limit) -> CanonicalKey;

    /// Relabels vertex v to perm[v].
    auto relabel(const EdgeOrderedGraph & g, std::span<const int> perm) -> EdgeOrderedGraph;

    /// Induced subgraph on the given vertices, relabelled 0..k-1 in increasing original label,
    /// with the inherited edge order compressed to 0..m'-1.
    auto restrict(const EdgeOrderedGraph & host, std::span<const int> vertices) -> EdgeOrderedGraph;
    auto restrict(const Graph & host, std::span<const int> vertices) -> Graph;
}
