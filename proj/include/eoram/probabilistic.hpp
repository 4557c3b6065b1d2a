#pragma once

#include <eoram/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace eoram
{
    /// Uniformly random edge order: Fisher-Yates over the identity ranks with Rng(seed).
    auto random_edge_ordering(const Graph & g, std::uint64_t seed) -> EdgeOrderedGraph;

    struct Fraction
    {
        std::uint64_t numerator = 0;
        std::uint64_t denominator = 1;

        auto value() const -> double { return static_cast<double>(numerator) / static_cast<double>(denominator); }
        auto operator==(const Fraction &) const -> bool = default;
    };

    inline constexpr int default_exact_edge_limit = 8;

    /// Fraction of all m! edge orderings of the host containing the pattern. Throws LimitExceeded
    /// when the host has more than edge_limit edges.
    auto containment_probability_exact(const EdgeOrderedGraph & pattern, const Graph & host,
            int edge_limit = default_exact_edge_limit) -> Fraction;

    struct Estimate
    {
        std::int64_t hits = 0;
        std::int64_t trials = 0;
        double p = 0.0;
        double standard_error = 0.0;
    };

    /// Trials run in fixed chunks seeded from (seed, chunk index), so the estimate does not depend
    /// on the thread count. Throws EmptySample when trials is zero.
    auto containment_probability_mc(const EdgeOrderedGraph & pattern, const Graph & host, std::int64_t trials,
            std::uint64_t seed, int threads = 1) -> Estimate;

    struct SaturationResult
    {
        bool saturated = true;
        /// First (left, right) t-subsets, in lexicographic order, whose K_{t,t} misses the pattern.
        std::optional<std::pair<std::vector<int>, std::vector<int>>> violation;
    };

    inline constexpr std::int64_t default_saturation_cap = 1'000'000;

    /// Host must be an ordering of K_{M,M} with parts {0..M-1} and {M..2M-1}.
    auto check_biclique_saturation(const EdgeOrderedGraph & host, const EdgeOrderedGraph & pattern, int t,
            std::int64_t cap = default_saturation_cap) -> SaturationResult;

    /// Random restarts: restart r samples random_edge_ordering(K_{M,M}, derive_seed(seed, r)).
    auto search_saturating_ordering(int m_side, const EdgeOrderedGraph & pattern, int t, int max_restarts,
            std::uint64_t seed, std::int64_t cap = default_saturation_cap) -> std::optional<EdgeOrderedGraph>;

    /// One K_{n,n} of the decomposition, on K_{t,t} with left {0..t-1} and right {t..2t-1}.
    struct BicliqueBlock
    {
        std::vector<int> left;
        std::vector<int> right;
    };

    /// Splits each side into t/n groups of n and returns all (t/n)^2 group pairs. Throws NotDivisible.
    auto decompose_biclique(int t, int n) -> std::vector<BicliqueBlock>;

    struct Feasibility
    {
        bool feasible = false;
        /// log(C(M,t)^2) - t^2 / (3 n^2 m!); feasible iff negative.
        long double margin = 0;
        bool high_precision = false;
    };

    /// Evaluates C(M,t)^2 * exp(-t^2/(3 n^2 m!)) < 1 in log space, re-evaluating with 100-digit
    /// arithmetic when the extended-precision margin is not clearly signed.
    auto lemma9_feasible(int n, int m, int t, int big_m) -> Feasibility;
}
