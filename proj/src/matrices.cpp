#include <eoram/matrices.hpp>
#include <eoram/constructions.hpp>
#include <eoram/error.hpp>
#include <eoram/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

using std::int64_t;
using std::pair;
using std::to_string;
using std::uint32_t;
using std::vector;

namespace eoram
{
    ZeroOneMatrix::ZeroOneMatrix(int rows, int cols) :
        _rows(rows),
        _cols(cols)
    {
        if (rows < 0 || cols < 0)
            raise(ErrorKind::InvalidArgument, "matrix dimensions must be non-negative");
        _cells.assign(static_cast<std::size_t>(rows) * cols, 0);
    }

    ZeroOneMatrix::ZeroOneMatrix(int rows, int cols, const vector<pair<int, int>> & ones) :
        ZeroOneMatrix(rows, cols)
    {
        for (auto [i, j] : ones) {
            if (at(i, j))
                raise(ErrorKind::InvalidArgument, "repeated position (" + to_string(i) + "," + to_string(j) + ")");
            set(i, j);
        }
    }

    auto ZeroOneMatrix::at(int i, int j) const -> bool
    {
        if (i < 1 || i > _rows || j < 1 || j > _cols)
            raise(ErrorKind::InvalidArgument, "position (" + to_string(i) + "," + to_string(j) + ") out of range");
        return _cells[static_cast<std::size_t>(i - 1) * _cols + (j - 1)];
    }

    auto ZeroOneMatrix::set(int i, int j, bool value) -> void
    {
        if (i < 1 || i > _rows || j < 1 || j > _cols)
            raise(ErrorKind::InvalidArgument, "position (" + to_string(i) + "," + to_string(j) + ") out of range");
        _cells[static_cast<std::size_t>(i - 1) * _cols + (j - 1)] = value ? 1 : 0;
    }

    auto ZeroOneMatrix::weight() const -> int
    {
        return static_cast<int>(std::count(_cells.begin(), _cells.end(), 1));
    }

    auto ZeroOneMatrix::ones() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int i = 1 ; i <= _rows ; ++i)
            for (int j = 1 ; j <= _cols ; ++j)
                if (at(i, j))
                    result.emplace_back(i, j);
        return result;
    }

    namespace
    {
        /// Greedy row matching for a fixed column choice: taking the earliest fitting row is optimal.
        template <typename Fits>
        auto rows_match(int a_rows, int m_rows, const Fits & fits) -> bool
        {
            int next = 0;
            for (int r = 0 ; r < m_rows ; ++r) {
                while (next < a_rows && ! fits(next, r))
                    ++next;
                if (next == a_rows)
                    return false;
                ++next;
            }
            return true;
        }

        auto next_combination(vector<int> & c, int n) -> bool
        {
            int k = static_cast<int>(c.size());
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i)
                --i;
            if (i < 0)
                return false;
            ++c[i];
            for (int j = i + 1 ; j < k ; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }

        /// Row bitmasks, bit j-1 for column j.
        auto row_masks(const ZeroOneMatrix & m) -> vector<uint32_t>
        {
            vector<uint32_t> masks(m.rows(), 0);
            for (auto [i, j] : m.ones())
                masks[i - 1] |= uint32_t{1} << (j - 1);
            return masks;
        }

        /// Containment on bitmask rows, for matrices with at most 32 columns.
        auto contains_masks(const vector<uint32_t> & a, int a_cols, const vector<uint32_t> & m, int m_cols) -> bool
        {
            int a_rows = static_cast<int>(a.size());
            int m_rows = static_cast<int>(m.size());
            if (m_rows > a_rows || m_cols > a_cols)
                return false;
            vector<int> cols(m_cols);
            for (int c = 0 ; c < m_cols ; ++c)
                cols[c] = c;
            vector<uint32_t> spread(m_rows);
            do {
                for (int r = 0 ; r < m_rows ; ++r) {
                    uint32_t s = 0;
                    for (int c = 0 ; c < m_cols ; ++c)
                        if (m[r] >> c & 1)
                            s |= uint32_t{1} << cols[c];
                    spread[r] = s;
                }
                if (rows_match(a_rows, m_rows, [&] (int ar, int mr) { return (a[ar] & spread[mr]) == spread[mr]; }))
                    return true;
            } while (next_combination(cols, a_cols));
            return false;
        }
    }

    auto contains_pattern(const ZeroOneMatrix & a, const ZeroOneMatrix & m) -> bool
    {
        if (m.rows() > a.rows() || m.cols() > a.cols())
            return false;
        if (m.weight() > a.weight())
            return false;

        auto pattern_ones = m.ones();
        vector<vector<int>> pattern_cols(m.rows());
        for (auto [i, j] : pattern_ones)
            pattern_cols[i - 1].push_back(j - 1);

        vector<int> cols(m.cols());
        for (int c = 0 ; c < m.cols() ; ++c)
            cols[c] = c;
        do {
            auto fits = [&] (int ar, int mr) {
                return std::all_of(pattern_cols[mr].begin(), pattern_cols[mr].end(),
                        [&] (int c) { return a.at(ar + 1, cols[c] + 1); });
            };
            if (rows_match(a.rows(), m.rows(), fits))
                return true;
        } while (next_combination(cols, a.cols()));
        return false;
    }

    auto path_pattern(int n) -> ZeroOneMatrix
    {
        if (n < 3)
            raise(ErrorKind::InvalidArgument, "path pattern needs n >= 3");
        int rows = (n + 1) / 2;
        int cols = n / 2;
        ZeroOneMatrix m(rows, cols);
        for (int i = 1 ; i <= cols ; ++i) {
            m.set(i, i);
            if (i + 1 <= rows)
                m.set(i + 1, i);
        }
        return m;
    }

    auto matrix_to_ordered_graph(const ZeroOneMatrix & m) -> VertexOrderedGraph
    {
        vector<Edge> edges;
        for (auto [i, j] : m.ones())
            edges.push_back({i - 1, m.rows() + j - 1});
        return VertexOrderedGraph::natural(Graph(m.rows() + m.cols(), std::move(edges)));
    }

    auto coloring_to_incidence(const EdgeOrderedGraph & host, const Coloring & coloring, int color) -> ZeroOneMatrix
    {
        int n = host.n();
        if (! (host == lex_complete(n)))
            raise(ErrorKind::NotLexicographic, "host must be the lexicographic complete graph");
        if (coloring.size() != host.m())
            raise(ErrorKind::InvalidArgument, "colouring does not cover the host");

        int half = (n + 1) / 2;
        ZeroOneMatrix a(half, n / 2);
        for (int i = 1 ; i <= half ; ++i)
            for (int j = 1 ; j <= n / 2 ; ++j)
                if (coloring[host.graph().edge_index(i - 1, half + j - 1)] == color)
                    a.set(i, j);
        return a;
    }

    auto fh_weight_bound(int n, int big_n) -> int64_t
    {
        if (n < 3 || big_n < 1)
            raise(ErrorKind::InvalidArgument, "need n >= 3 and N >= 1");
        int64_t nf = n / 2, nc = (n + 1) / 2;
        int64_t bf = big_n / 2, bc = (big_n + 1) / 2;
        return (nf - 1) * bc + (nc - 1) * bf - (nc - 1) * (nf - 1);
    }

    auto max_weight_avoiding(const ZeroOneMatrix & m, int rows, int cols, int threads) -> int
    {
        if (rows < 0 || cols < 0 || rows * cols > max_oracle_cells)
            raise(ErrorKind::LimitExceeded, "oracle limited to " + to_string(max_oracle_cells) + " cells");
        int cells = rows * cols;
        if (m.rows() > rows || m.cols() > cols)
            return cells;
        if (m.weight() == 0)
            raise(ErrorKind::InvalidArgument, "every matrix contains a pattern without ones");

        auto pattern = row_masks(m);

        // Cells in row-major order; the first `prefix` cells are fixed per shard.
        int prefix = std::min(cells, 4);
        int shards = 1 << prefix;
        std::atomic<int> best{0};

        parallel_for(shards, threads, [&] (int shard) {
            vector<uint32_t> a(rows, 0);
            int weight = 0;
            for (int c = 0 ; c < prefix ; ++c)
                if (shard >> c & 1) {
                    a[c / cols] |= uint32_t{1} << (c % cols);
                    ++weight;
                }
            if (contains_masks(a, cols, pattern, m.cols()))
                return;

            auto search = [&] (auto & self, int cell) -> void {
                if (weight + (cells - cell) <= best.load())
                    return;
                if (cell == cells) {
                    int seen = best.load();
                    while (weight > seen && ! best.compare_exchange_weak(seen, weight))
                        ;
                    return;
                }
                uint32_t bit = uint32_t{1} << (cell % cols);
                a[cell / cols] |= bit;
                ++weight;
                if (! contains_masks(a, cols, pattern, m.cols()))
                    self(self, cell + 1);
                a[cell / cols] &= ~bit;
                --weight;
                self(self, cell + 1);
            };
            search(search, prefix);
        });
        return best.load();
    }

    auto prop5_bound(int n) -> double
    {
        if (n <= 2)
            raise(ErrorKind::InvalidArgument, "bound defined for n > 2");
        double x = n;
        return 2 * x - 3 + std::sqrt(2 * x * x - 8 * x + 11);
    }
}
