#pragma once

#include <eoram/embed.hpp>
#include <eoram/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eoram
{
    /// Forbidden copies per colour: a colouring is bad when no set in forbidden[c] is entirely
    /// coloured c.
    struct CopyHypergraph
    {
        int edge_count = 0;
        std::vector<std::vector<EdgeSet>> forbidden;
    };

    struct SearchOptions
    {
        int threads = 1;
        std::int64_t copy_cap = default_copy_cap;
        /// Fix the minimum-priority edge to colour 0 when every colour forbids the same copies.
        bool symmetry_breaking = true;
        /// Directory for memoised copy hypergraphs; empty disables caching.
        std::string cache_dir;
    };

    struct ArrowingResult
    {
        bool arrows = false;
        /// Present iff arrows is false; verified against the copy hypergraph before returning.
        std::optional<Coloring> witness;
        std::int64_t nodes = 0;
    };

    /// Backtracking with unit propagation for a k-colouring that avoids every forbidden copy.
    /// priority[e] breaks branching ties (lower first); pass the host edge ranks.
    auto solve_copy_hypergraph(const CopyHypergraph & hypergraph, int k, const std::vector<int> & priority,
            const SearchOptions & options = {}) -> ArrowingResult;

    /// Non-diagonal two-colour arrowing: colour 0 (red) must avoid red_target, colour 1 (blue)
    /// must avoid blue_target. With k > 2 the targets must coincide and every colour avoids them.
    auto adversary_coloring(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k = 2, const SearchOptions & options = {}) -> ArrowingResult;
    auto adversary_coloring(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k = 2, const SearchOptions & options = {}) -> ArrowingResult;
    auto adversary_coloring(const Graph & host, const Graph & red_target,
            const Graph & blue_target, int k = 2, const SearchOptions & options = {}) -> ArrowingResult;

    /// A bad colouring of K_n (with the given edge ordering in the general edge-ordered case).
    struct BadColoring
    {
        int host_n = 0;
        std::optional<EdgeOrderedGraph> host_ordering;
        Coloring coloring;
    };

    struct RamseyAnswer
    {
        std::optional<int> value;
        /// Largest host size examined.
        int searched_to = 0;
        /// Lex/ordered/classic: one per host size below the value (or up to the bound when unknown).
        /// General edge-ordered: one per ordering class at value - 1 (or at the bound).
        std::vector<BadColoring> lower_certificates;
        /// The arrowing host ordering (general and lex variants).
        std::optional<EdgeOrderedGraph> witness_host;
        std::int64_t nodes = 0;
    };

    /// Least N <= max_host with K_N^lex arrowing the targets. Throws NotLexicographic.
    auto lex_ramsey(const EdgeOrderedGraph & red_target, const std::optional<EdgeOrderedGraph> & blue_target,
            int max_host, const SearchOptions & options = {}) -> RamseyAnswer;

    auto ordered_ramsey(const VertexOrderedGraph & red_target, const std::optional<VertexOrderedGraph> & blue_target,
            int max_host, const SearchOptions & options = {}) -> RamseyAnswer;

    auto classic_ramsey(const Graph & red_target, const std::optional<Graph> & blue_target,
            int max_host, const SearchOptions & options = {}) -> RamseyAnswer;

    inline constexpr int default_ordering_class_limit = 5;

    /// One representative per isomorphism class of edge orderings of K_n, in canonical-key order.
    /// Each representative is its own canonical form. Throws LimitExceeded above the limit.
    auto for_each_host_ordering_class(int n, const std::function<void (const EdgeOrderedGraph &)> & fn,
            int limit = default_ordering_class_limit) -> void;
    auto enumerate_host_ordering_classes(int n, int limit = default_ordering_class_limit) -> std::vector<EdgeOrderedGraph>;

    /// Least N such that some edge ordering of K_N arrows the targets. Throws LimitExceeded when
    /// max_host is above the class-enumeration limit.
    auto edge_ordered_ramsey(const EdgeOrderedGraph & red_target, const EdgeOrderedGraph & blue_target,
            int max_host, const SearchOptions & options = {}, int limit = default_ordering_class_limit) -> RamseyAnswer;

    enum class Lemma4Status
    {
        Holds,
        Violated,
        Inconclusive
    };

    struct Lemma4Report
    {
        RamseyAnswer lex;
        std::vector<std::vector<int>> maps;
        std::vector<RamseyAnswer> ordered;
        std::optional<int> min_ordered;
        Lemma4Status status = Lemma4Status::Inconclusive;
    };

    /// Computes the lexicographic Ramsey number of the target and the ordered Ramsey number of the
    /// vertex ordering induced by every consistent map, and compares the former with their minimum.
    auto verify_lemma4(const EdgeOrderedGraph & target, int max_host, const SearchOptions & options = {}) -> Lemma4Report;

    /// Copy hypergraph construction shared by the drivers and exposed for tests and the CLI.
    auto copy_hypergraph(const EdgeOrderedGraph & host, const EdgeOrderedGraph & red_target,
            const EdgeOrderedGraph & blue_target, int k, const SearchOptions & options = {}) -> CopyHypergraph;
    auto copy_hypergraph(const VertexOrderedGraph & host, const VertexOrderedGraph & red_target,
            const VertexOrderedGraph & blue_target, int k, const SearchOptions & options = {}) -> CopyHypergraph;
    auto copy_hypergraph(const Graph & host, const Graph & red_target,
            const Graph & blue_target, int k, const SearchOptions & options = {}) -> CopyHypergraph;
}
