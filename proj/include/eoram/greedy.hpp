#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <variant>
#include <vector>

namespace eoram
{
    /// A partitioned complete host K_N for the greedy embedding: part I_i receives the i-th vertex
    /// of the degeneracy order.
    struct GreedyInstance
    {
        Graph pattern;
        std::vector<int> order;
        int d = 0;
        int t = 1;
        int host_n = 0;
        std::vector<std::vector<int>> parts;
    };

    /// blue_copy.vertex_map[v] is the host image of pattern vertex v.
    struct BlueCopy
    {
        std::vector<int> vertex_map;

        auto operator==(const BlueCopy &) const -> bool = default;
    };

    /// All edges between left (in part `left_part`) and right (in part `right_part`) are red.
    struct RedBiclique
    {
        int left_part = 0;
        int right_part = 0;
        std::vector<int> left;
        std::vector<int> right;

        auto operator==(const RedBiclique &) const -> bool = default;
    };

    using GreedyCertificate = std::variant<BlueCopy, RedBiclique>;

    /// Candidate-set bookkeeping recorded while the greedy runs.
    struct GreedyTrace
    {
        std::vector<int> updates;            // per part index, how often C_j shrank
        std::vector<int> selection_sizes;    // |C_i| at each step that selected a vertex
    };

    /// Degeneracy order, d and the part sizes n' * t^(d+1), N = n'^2 * t^(d+1).
    /// Throws InvalidArgument when t < 1, the pattern is empty or N overflows.
    auto host_for(const Graph & pattern, int t) -> GreedyInstance;

    /// Throws InvalidInstance unless the instance satisfies the back-degree and partition invariants.
    auto validate_instance(const GreedyInstance & instance) -> void;

    /// Greedily embeds a blue copy of the pattern with v_i in I_i; when step i has no good candidate,
    /// returns a red K_{t,t} between I_i and a forward neighbour's part. The colouring is indexed by
    /// edge index of K_N.
    auto greedy_embed(const GreedyInstance & instance, const Coloring & coloring, GreedyTrace * trace = nullptr) -> GreedyCertificate;

    /// Independent check of a certificate against the instance and colouring.
    auto verify_certificate(const GreedyInstance & instance, const Coloring & coloring, const GreedyCertificate & certificate) -> bool;
}
