#pragma once

#include <eoram/embed.hpp>
#include <eoram/graph.hpp>
#include <eoram/io.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eoram
{
    /// Checks injectivity, adjacency, order preservation and the colour filter directly.
    auto check_embedding(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host, const std::vector<int> & vertex_map,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;
    auto check_embedding(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host, const std::vector<int> & vertex_map,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;
    auto check_embedding(const Graph & pattern, const Graph & host, const std::vector<int> & vertex_map,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;

    /// Distinct copy edge sets found by trying every vertex injection.
    auto naive_copies(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host) -> std::vector<EdgeSet>;
    auto naive_copies(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host) -> std::vector<EdgeSet>;
    auto naive_copies(const Graph & pattern, const Graph & host) -> std::vector<EdgeSet>;

    /// Whether some vertex injection gives a copy lying in the filtered colour.
    auto naive_has_copy(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;
    auto naive_has_copy(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;
    auto naive_has_copy(const Graph & pattern, const Graph & host,
            std::optional<ColorFilter> filter = std::nullopt) -> bool;

    /// True iff colour 0 has no red_target copy, colour 1 no blue_target copy, and any further colour
    /// no red_target copy.
    auto is_bad_coloring(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, const Coloring & coloring) -> bool;
    auto is_bad_coloring(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, const Coloring & coloring) -> bool;
    auto is_bad_coloring(const Graph & host, const Graph & red_target,
            const Graph & blue_target, const Coloring & coloring) -> bool;

    inline constexpr int max_brute_force_edges = 24;

    /// Tries all k^m colourings. Throws LimitExceeded when k^m exceeds 2^max_brute_force_edges.
    auto brute_force_arrows(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k = 2) -> bool;
    auto brute_force_arrows(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k = 2) -> bool;
    auto brute_force_arrows(const Graph & host, const Graph & red_target,
            const Graph & blue_target, int k = 2) -> bool;

    struct VerifyResult
    {
        bool ok = false;
        std::string detail;
    };

    inline constexpr int arrowing_brute_force_edges = 20;

    /// Re-checks an emitted certificate of any kind using only its own contents.
    auto verify_certificate_json(const io::json & certificate) -> VerifyResult;
}
