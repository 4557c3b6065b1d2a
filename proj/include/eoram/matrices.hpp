#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace eoram
{
    /// A 0/1 matrix with 1-indexed positions.
    class ZeroOneMatrix
    {
        private:
            int _rows = 0;
            int _cols = 0;
            std::vector<char> _cells;

        public:
            ZeroOneMatrix() = default;
            ZeroOneMatrix(int rows, int cols);
            /// Throws InvalidArgument on out-of-range or repeated positions.
            ZeroOneMatrix(int rows, int cols, const std::vector<std::pair<int, int>> & ones);

            auto rows() const noexcept -> int { return _rows; }
            auto cols() const noexcept -> int { return _cols; }
            auto at(int i, int j) const -> bool;
            auto set(int i, int j, bool value = true) -> void;
            auto weight() const -> int;
            /// Positions of the ones in row-major order.
            auto ones() const -> std::vector<std::pair<int, int>>;

            auto operator==(const ZeroOneMatrix &) const -> bool = default;
    };

    /// True iff some increasing choice of m.rows() rows and m.cols() columns of a has a 1 wherever m does.
    auto contains_pattern(const ZeroOneMatrix & a, const ZeroOneMatrix & m) -> bool;

    /// ceil(n/2) x floor(n/2) with ones at (i,i) and (i+1,i).
    auto path_pattern(int n) -> ZeroOneMatrix;

    /// Rows become vertices 0..rows-1 and column j becomes rows+j-1, in natural vertex order.
    auto matrix_to_ordered_graph(const ZeroOneMatrix & m) -> VertexOrderedGraph;

    /// ceil(N/2) x floor(N/2) matrix with (i,j) set when the edge {i, ceil(N/2)+j} of the lexicographic
    /// K_N has the given colour.
    auto coloring_to_incidence(const EdgeOrderedGraph & host, const Coloring & coloring, int color) -> ZeroOneMatrix;

    /// (floor(n/2)-1) ceil(N/2) + (ceil(n/2)-1) floor(N/2) - (ceil(n/2)-1)(floor(n/2)-1).
    auto fh_weight_bound(int n, int big_n) -> std::int64_t;

    inline constexpr int max_oracle_cells = 24;

    /// Largest weight of a rows x cols matrix avoiding m, by exhaustive search with pruning.
    /// Throws LimitExceeded above max_oracle_cells cells, InvalidArgument if m has no ones and fits.
    auto max_weight_avoiding(const ZeroOneMatrix & m, int rows, int cols, int threads = 1) -> int;

    /// 2n - 3 + sqrt(2n^2 - 8n + 11).
    auto prop5_bound(int n) -> double;
}
