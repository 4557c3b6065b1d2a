#include <eoram/probabilistic.hpp>
#include <eoram/embed.hpp>
#include <eoram/error.hpp>
#include <eoram/parallel.hpp>
#include <eoram/rng.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

using std::int64_t;
using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace eoram
{
    auto random_edge_ordering(const Graph & g, uint64_t seed) -> EdgeOrderedGraph
    {
        vector<int> rank(g.m());
        std::iota(rank.begin(), rank.end(), 0);
        Rng rng(seed);
        rng.shuffle(std::span<int>(rank));
        return EdgeOrderedGraph(g, std::move(rank));
    }

    auto containment_probability_exact(const EdgeOrderedGraph & pattern, const Graph & host, int edge_limit) -> Fraction
    {
        if (host.m() > edge_limit)
            raise(ErrorKind::LimitExceeded, "exact containment needs at most " + to_string(edge_limit) + " host edges");

        uint64_t total = 1;
        for (int i = 2 ; i <= host.m() ; ++i)
            total *= static_cast<uint64_t>(i);
        if (pattern.m() > host.m() || pattern.n() > host.n())
            return {0, 1};

        vector<int> rank(host.m());
        std::iota(rank.begin(), rank.end(), 0);
        uint64_t hits = 0;
        do {
            if (find_edge_ordered_embedding(pattern, EdgeOrderedGraph(host, rank)))
                ++hits;
        } while (std::next_permutation(rank.begin(), rank.end()));

        uint64_t g = std::gcd(hits, total);
        return {hits / g, total / g};
    }

    auto containment_probability_mc(const EdgeOrderedGraph & pattern, const Graph & host, int64_t trials,
            uint64_t seed, int threads) -> Estimate
    {
        if (trials <= 0)
            raise(ErrorKind::EmptySample, "need at least one trial");

        constexpr int64_t chunk = 4096;
        int chunks = static_cast<int>((trials + chunk - 1) / chunk);
        vector<int64_t> hits(chunks, 0);
        parallel_for(chunks, threads, [&] (int c) {
            Rng rng(derive_seed(seed, static_cast<uint64_t>(c)));
            vector<int> rank(host.m());
            int64_t count = std::min(chunk, trials - c * chunk);
            for (int64_t i = 0 ; i < count ; ++i) {
                std::iota(rank.begin(), rank.end(), 0);
                rng.shuffle(std::span<int>(rank));
                if (find_edge_ordered_embedding(pattern, EdgeOrderedGraph(host, rank)))
                    ++hits[c];
            }
        });

        Estimate e;
        e.trials = trials;
        e.hits = std::accumulate(hits.begin(), hits.end(), int64_t{0});
        e.p = static_cast<double>(e.hits) / static_cast<double>(trials);
        e.standard_error = std::sqrt(e.p * (1.0 - e.p) / static_cast<double>(trials));
        return e;
    }

    namespace
    {
        auto binomial(int n, int k) -> long double
        {
            if (k < 0 || k > n)
                return 0;
            long double r = 1;
            for (int i = 1 ; i <= k ; ++i)
                r = r * (n - k + i) / i;
            return r;
        }

        auto next_combination(vector<int> & c, int lo, int hi) -> bool
        {
            int k = static_cast<int>(c.size());
            int i = k - 1;
            while (i >= 0 && c[i] == hi - k + i)
                --i;
            if (i < 0)
                return false;
            ++c[i];
            for (int j = i + 1 ; j < k ; ++j)
                c[j] = c[j - 1] + 1;
            (void) lo;
            return true;
        }

        auto first_combination(int lo, int k) -> vector<int>
        {
            vector<int> c(k);
            std::iota(c.begin(), c.end(), lo);
            return c;
        }
    }

    auto check_biclique_saturation(const EdgeOrderedGraph & host, const EdgeOrderedGraph & pattern, int t, int64_t cap) -> SaturationResult
    {
        int side = host.n() / 2;
        if (host.n() % 2 != 0 || ! (host.graph() == Graph::complete_bipartite(side, side)))
            raise(ErrorKind::InvalidArgument, "host must be an edge ordering of K_{M,M}");
        if (t < 1 || t > side)
            raise(ErrorKind::InvalidArgument, "t must be between 1 and M");
        long double count = binomial(side, t);
        if (count * count > static_cast<long double>(cap))
            raise(ErrorKind::CapExceeded, "C(M,t)^2 exceeds the cap");

        auto left = first_combination(0, t);
        do {
            auto right = first_combination(side, t);
            do {
                vector<int> vertices = left;
                vertices.insert(vertices.end(), right.begin(), right.end());
                if (! find_edge_ordered_embedding(pattern, restrict(host, vertices)))
                    return {false, std::pair{left, right}};
            } while (next_combination(right, side, 2 * side));
        } while (next_combination(left, 0, side));
        return {true, std::nullopt};
    }

    auto search_saturating_ordering(int m_side, const EdgeOrderedGraph & pattern, int t, int max_restarts,
            uint64_t seed, int64_t cap) -> optional<EdgeOrderedGraph>
    {
        if (m_side < 1)
            raise(ErrorKind::InvalidArgument, "M must be positive");
        auto base = Graph::complete_bipartite(m_side, m_side);
        for (int r = 0 ; r < max_restarts ; ++r) {
            auto host = random_edge_ordering(base, derive_seed(seed, static_cast<uint64_t>(r)));
            if (check_biclique_saturation(host, pattern, t, cap).saturated)
                return host;
        }
        return std::nullopt;
    }

    auto decompose_biclique(int t, int n) -> vector<BicliqueBlock>
    {
        if (t < 1 || n < 1)
            raise(ErrorKind::InvalidArgument, "t and n must be positive");
        if (t % n != 0)
            raise(ErrorKind::NotDivisible, to_string(n) + " does not divide " + to_string(t));
        int groups = t / n;
        vector<BicliqueBlock> blocks;
        for (int a = 0 ; a < groups ; ++a)
            for (int b = 0 ; b < groups ; ++b) {
                BicliqueBlock block;
                for (int i = 0 ; i < n ; ++i) {
                    block.left.push_back(a * n + i);
                    block.right.push_back(t + b * n + i);
                }
                blocks.push_back(std::move(block));
            }
        return blocks;
    }

    auto lemma9_feasible(int n, int m, int t, int big_m) -> Feasibility
    {
        if (n < 1 || m < 1 || t < 1 || big_m < 1)
            raise(ErrorKind::InvalidArgument, "all parameters must be positive");

        Feasibility result;
        if (t > big_m) {
            // C(M,t) = 0.
            result.feasible = true;
            result.margin = -std::numeric_limits<long double>::infinity();
            return result;
        }

        long double log_binomial = std::lgamma(static_cast<long double>(big_m) + 1)
            - std::lgamma(static_cast<long double>(t) + 1) - std::lgamma(static_cast<long double>(big_m - t) + 1);
        long double log_factorial = std::lgamma(static_cast<long double>(m) + 1);
        long double exponent = std::exp(2 * std::log(static_cast<long double>(t)) - std::log(3.0L)
                - 2 * std::log(static_cast<long double>(n)) - log_factorial);
        long double margin = 2 * log_binomial - exponent;
        long double scale = std::fabs(2 * log_binomial) + std::fabs(exponent);

        if (std::isfinite(margin) && std::fabs(margin) > 1e-12L * std::max(scale, 1.0L)) {
            result.margin = margin;
            result.feasible = margin < 0;
            return result;
        }

        // Close call or out of range: redo it with exact factorials and 100-digit logs.
        using boost::multiprecision::cpp_bin_float_100;
        using boost::multiprecision::cpp_int;
        if (m > 3000)
            raise(ErrorKind::Overflow, "m! too large for the high-precision fallback");
        cpp_int factorial = 1;
        for (int i = 2 ; i <= m ; ++i)
            factorial *= i;
        cpp_bin_float_100 log_c = 0;
        for (int i = 1 ; i <= t ; ++i)
            log_c += log(cpp_bin_float_100(big_m - t + i)) - log(cpp_bin_float_100(i));
        cpp_bin_float_100 x = cpp_bin_float_100(t) * t / (cpp_bin_float_100(3) * n * n * cpp_bin_float_100(factorial));
        cpp_bin_float_100 precise = 2 * log_c - x;
        result.margin = static_cast<long double>(precise);
        result.feasible = precise < 0;
        result.high_precision = true;
        return result;
    }
}
