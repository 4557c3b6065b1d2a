#pragma once

#include <eoram/graph.hpp>
#include <eoram/greedy.hpp>
#include <eoram/matrices.hpp>
#include <eoram/paramwords.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace eoram::io
{
    using json = nlohmann::json;

    /// {"n": n, "edges": [[u, v], ...]}
    auto to_json(const Graph & g) -> json;
    /// Accepts "edges" or "edge_order".
    auto graph_from_json(const json & j) -> Graph;

    /// {"n": n, "edge_order": [[u, v], ...]} listing edges from the minimum up.
    auto to_json(const EdgeOrderedGraph & g) -> json;
    auto edge_ordered_from_json(const json & j) -> EdgeOrderedGraph;

    /// {"n": n, "vertex_order": [...], "edges": [[u, v], ...]}
    auto to_json(const VertexOrderedGraph & g) -> json;
    auto vertex_ordered_from_json(const json & j) -> VertexOrderedGraph;

    /// {"k": k, "colors": [...]} with position i the colour of the i-th host edge in the host order
    /// (sorted-pair order for unordered hosts).
    auto to_json(const Coloring & c, const EdgeOrderedGraph * host = nullptr) -> json;
    auto coloring_from_json(const json & j, const EdgeOrderedGraph * host = nullptr) -> Coloring;

    /// {"rows": r, "cols": c, "ones": [[i, j], ...]}, 1-indexed.
    auto to_json(const ZeroOneMatrix & m) -> json;
    auto matrix_from_json(const json & j) -> ZeroOneMatrix;

    /// {"alphabet": [...], "t": t, "symbols": ["L1", "0", ...]}
    auto to_json(const ParameterWord & w) -> json;
    auto word_from_json(const json & j) -> ParameterWord;

    /// {"graph": edge-ordered graph, "vertex_order": [...]}
    auto to_json(const BiOrderedGraph & f) -> json;
    auto bi_ordered_from_json(const json & j) -> BiOrderedGraph;

    auto to_json(const GreedyInstance & instance) -> json;
    auto greedy_instance_from_json(const json & j) -> GreedyInstance;
    auto to_json(const GreedyCertificate & certificate) -> json;
    auto greedy_certificate_from_json(const json & j) -> GreedyCertificate;

    /// Certificate documents understood by verify_certificate_json. The mode is "edge", "vertex" or
    /// "plain" according to the host type.
    auto bad_coloring_certificate(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, const Coloring & coloring) -> json;
    auto bad_coloring_certificate(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, const Coloring & coloring) -> json;
    auto bad_coloring_certificate(const Graph & host, const Graph & red_target,
            const Graph & blue_target, const Coloring & coloring) -> json;
    auto arrowing_certificate(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target) -> json;
    auto arrowing_certificate(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target) -> json;
    auto arrowing_certificate(const Graph & host, const Graph & red_target, const Graph & blue_target) -> json;
    auto embedding_certificate(const EdgeOrderedGraph & pattern, const EdgeOrderedGraph & host,
            const std::vector<int> & vertex_map, const Coloring * coloring = nullptr, int color = red) -> json;
    auto embedding_certificate(const VertexOrderedGraph & pattern, const VertexOrderedGraph & host,
            const std::vector<int> & vertex_map, const Coloring * coloring = nullptr, int color = red) -> json;
    auto embedding_certificate(const Graph & pattern, const Graph & host,
            const std::vector<int> & vertex_map, const Coloring * coloring = nullptr, int color = red) -> json;
    auto greedy_certificate(const GreedyInstance & instance, const Coloring & coloring,
            const GreedyCertificate & certificate) -> json;

    /// Throws InvalidArgument when the file cannot be read or parsed.
    auto read_file(const std::string & path) -> json;
    auto write_file(const std::string & path, const json & j) -> void;
    /// Two-space indented dump with a trailing newline.
    auto dump(const json & j) -> std::string;
}
