#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace eoram
{
    /// A letter of the alphabet (index into the alphabet) or the parameter lambda_index (1-based).
    struct Symbol
    {
        bool parameter = false;
        int index = 0;

        static auto letter(int i) -> Symbol { return {false, i}; }
        static auto lambda(int j) -> Symbol { return {true, j}; }

        auto operator<=>(const Symbol &) const = default;
    };

    /// Sorted positions in [N], 1-indexed.
    using Subset = std::vector<int>;

    /// A t-parameter word of length N over an alphabet: every lambda_j occurs, and first occurrences
    /// appear in increasing j.
    class ParameterWord
    {
        private:
            std::vector<std::string> _alphabet;
            int _t = 0;
            std::vector<Symbol> _symbols;

        public:
            ParameterWord() = default;
            /// Throws InvalidArgument when the word breaks the occurrence rules.
            ParameterWord(std::vector<std::string> alphabet, int t, std::vector<Symbol> symbols);

            /// lambda_1 ... lambda_t over the alphabet {"0"}.
            static auto identity(int t) -> ParameterWord;
            /// Parses tokens such as "L2" and alphabet letters.
            static auto parse(std::vector<std::string> alphabet, int t, const std::vector<std::string> & tokens) -> ParameterWord;

            auto alphabet() const noexcept -> const std::vector<std::string> & { return _alphabet; }
            auto parameters() const noexcept -> int { return _t; }
            auto length() const noexcept -> int { return static_cast<int>(_symbols.size()); }
            auto symbols() const noexcept -> const std::vector<Symbol> & { return _symbols; }
            /// Symbol at position i in [N].
            auto at(int i) const -> Symbol { return _symbols.at(i - 1); }
            /// S_1..S_t: the positions of each parameter.
            auto blocks() const -> std::vector<Subset>;
            auto tokens() const -> std::vector<std::string>;
            auto to_string() const -> std::string;

            auto operator==(const ParameterWord &) const -> bool = default;
    };

    /// (f . g)(i) = f(i) for letters and g(j) where f(i) = lambda_j. Throws DimensionMismatch unless
    /// g has length f.parameters(), InvalidArgument on different alphabets.
    auto compose(const ParameterWord & f, const ParameterWord & g) -> ParameterWord;

    inline constexpr int max_enumerated_length = 10;

    /// All t-parameter words of the given length over an alphabet of the given size (letters named
    /// "0", "1", ...), in lexicographic order with letters before parameters. Throws LimitExceeded
    /// past max_enumerated_length.
    auto enumerate_words(int length, int t, int alphabet_size = 1) -> std::vector<ParameterWord>;

    /// X = S_1 u S_3 and Y = S_2 u S_3 of a 3-parameter word. Throws DimensionMismatch unless t = 3.
    auto word_to_edge(const ParameterWord & w) -> std::pair<Subset, Subset>;

    inline constexpr int max_subset_ground = 12;

    /// All subsets of [N] with an edge between intersecting sets. Vertices are ordered by minimum
    /// element, ties by the sorted element list, with the empty set last; edges by min(X n Y), then
    /// by the vertex ranks of the lower and upper endpoint. Edge index equals edge rank.
    class SubsetHost
    {
        private:
            int _ground = 0;
            std::vector<std::uint32_t> _by_vrank;
            std::vector<int> _vrank;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> _edges;

            auto edge_key(std::uint32_t x, std::uint32_t y) const -> std::tuple<int, int, int>;

        public:
            /// Throws LimitExceeded when N > max_subset_ground.
            explicit SubsetHost(int ground);

            auto ground() const noexcept -> int { return _ground; }
            auto vertex_count() const noexcept -> int { return static_cast<int>(_by_vrank.size()); }
            auto edge_count() const noexcept -> int { return static_cast<int>(_edges.size()); }
            auto vertex_rank(const Subset & x) const -> int;
            auto vertex_at(int rank) const -> Subset;
            /// Endpoints of an edge, lower vertex rank first.
            auto edge(int index) const -> std::pair<Subset, Subset>;
            /// Rank of {x, y}, or -1 when the sets are disjoint or equal.
            auto edge_index(const Subset & x, const Subset & y) const -> int;

            auto mask(const Subset & x) const -> std::uint32_t;
            auto subset(std::uint32_t mask) const -> Subset;
    };

    /// Colouring of every host edge computed from its endpoints (lower vertex rank first).
    auto subset_coloring(const SubsetHost & host, const std::function<int (const Subset &, const Subset &)> & color,
            int k = 2) -> Coloring;
    /// Colour 0 when min(X n Y) is even, 1 when odd.
    auto parity_coloring(const SubsetHost & host) -> Coloring;

    /// chi'(w) = chi({X, Y}) with (X, Y) = word_to_edge(w), for one word.
    auto translate_color(const SubsetHost & host, const Coloring & chi, const ParameterWord & w) -> int;

    struct WordColoring
    {
        std::vector<ParameterWord> words;
        std::vector<int> colors;
    };

    /// chi' on every 3-parameter word of length N over {0}.
    auto translate_coloring(const SubsetHost & host, const Coloring & chi) -> WordColoring;

    /// A graph with orders on both vertices and edges. v_i is the vertex of rank i-1 and f_l the
    /// edge of rank l-1.
    struct BiOrderedGraph
    {
        EdgeOrderedGraph graph;
        std::vector<int> vertex_rank;

        /// Identity vertex order.
        static auto natural(EdgeOrderedGraph g) -> BiOrderedGraph;

        auto n() const noexcept -> int { return graph.n(); }
        auto m() const noexcept -> int { return graph.m(); }
        auto vertex(int i) const -> int;
        /// Positions (1-based) of the endpoints of f_l in the vertex order, smaller first.
        auto edge_positions(int l) const -> std::pair<int, int>;
    };

    /// F_i = S_i together with S_{n+l} for every edge f_l at v_i. Throws DimensionMismatch unless
    /// w has n + m parameters.
    auto extract_F_star(const ParameterWord & w, const BiOrderedGraph & f) -> std::vector<Subset>;

    /// The 3-parameter word v of length n + m for which w . v has blocks F_i \ S_{n+l}, F_j \ S_{n+l}
    /// and S_{n+l}. Throws NotAnEdge unless f_l = {v_i, v_j} with i < j.
    auto build_edge_selector(const ParameterWord & w, const BiOrderedGraph & f, int i, int j, int l) -> ParameterWord;

    struct Theorem8Report
    {
        bool precondition = true;
        bool vertex_order = false;
        bool induced_edges = false;
        bool edge_order = false;
        bool monochromatic = false;
        std::optional<int> color;
        std::vector<Subset> sets;

        auto all_pass() const -> bool
        {
            return precondition && vertex_order && induced_edges && edge_order && monochromatic;
        }
    };

    /// Checks that the sets induce a copy of f in the host with matching vertex and edge orders and
    /// a single colour. The precondition flag is left set.
    auto check_induced_copy(const SubsetHost & host, const BiOrderedGraph & f, const std::vector<Subset> & sets,
            const Coloring & chi) -> Theorem8Report;

    /// Checks that chi'(w . v) is constant over all 3-parameter words v, then extracts F* and checks
    /// it. With strict set a non-constant word throws NotMonochromaticWord; otherwise the report
    /// records the failed precondition and the remaining checks still run.
    auto verify_theorem8_witness(const SubsetHost & host, const BiOrderedGraph & f, const ParameterWord & w,
            const Coloring & chi, bool strict = true) -> Theorem8Report;
}
