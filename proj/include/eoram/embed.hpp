#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace eoram
{
    /// Restricts an embedding search to host edges of one colour.
    struct ColorFilter
    {
        std::span<const int> colors;
        int color = red;
    };

    /// A copy of a pattern in a host, as the sorted list of host edge indices it uses.
    using EdgeSet = std::vector<int>;

    inline constexpr std::int64_t default_copy_cap = 10'000'000;

    /// First embedding in canonical search order: pattern edges in increasing rank, host edges tried
    /// in increasing rank, each host edge first in its (low, high) orientation. Isolated pattern
    /// vertices take the lowest unused host labels.
    auto find_edge_ordered_embedding(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> std::optional<Embedding>;

    /// Distinct edge sets of all edge-ordered copies, sorted. Throws CapExceeded past the cap.
    auto enumerate_copies(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            std::int64_t cap = default_copy_cap, int threads = 1) -> std::vector<EdgeSet>;

    /// Order-preserving embedding: pattern vertices taken in pattern order map to host vertices
    /// increasing in host order, lowest first.
    auto find_vertex_ordered_embedding(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> std::optional<Embedding>;

    auto enumerate_copies(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            std::int64_t cap = default_copy_cap, int threads = 1) -> std::vector<EdgeSet>;

    /// Unordered (non-induced) subgraph embedding.
    auto find_embedding(const Graph & pattern, const Graph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> std::optional<Embedding>;

    auto enumerate_copies(const Graph & pattern, const Graph & host,
            std::int64_t cap = default_copy_cap, int threads = 1) -> std::vector<EdgeSet>;

    enum class CanonicalType
    {
        Lex,
        MaxLex,
        InverseLex,
        InverseMaxLex
    };

    auto canonical_type_name(CanonicalType type) -> std::string_view;
    auto parse_canonical_type(std::string_view name) -> CanonicalType;

    /// The canonical ordering of K_n of the given type, on the identity vertex map.
    auto canonical_clique_ordering(int n, CanonicalType type) -> EdgeOrderedGraph;

    struct CanonicalClique
    {
        std::vector<int> vertices;
        CanonicalType type = CanonicalType::Lex;
    };

    /// First n-subset, in lexicographic subset order, whose induced ordering is isomorphic to one of
    /// the four canonical orderings (types tested in declaration order). Throws CapExceeded when
    /// C(host.n, n) exceeds the cap.
    auto find_canonical_clique(const EdgeOrderedGraph & host, int n,
            std::int64_t cap = default_copy_cap) -> std::optional<CanonicalClique>;
}
