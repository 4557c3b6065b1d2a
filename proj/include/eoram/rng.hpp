#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace eoram
{
    /// Seedable generator used by every randomised operation: std::mt19937_64, whose output
    /// stream is fixed by the standard, plus a bounded-integer draw that does not depend on the
    /// standard library's distribution implementations.
    class Rng
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Rng(std::uint64_t seed) : _engine(seed) {}

            auto next() -> std::uint64_t { return _engine(); }

            /// Uniform integer in [0, bound), bound > 0. Rejection sampling on the low bits.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                std::uint64_t threshold = (0 - bound) % bound;
                for (;;) {
                    std::uint64_t x = _engine();
                    if (x >= threshold)
                        return x % bound;
                }
            }

            /// Fisher-Yates, from the back.
            template <typename T_>
            auto shuffle(std::span<T_> values) -> void
            {
                for (std::size_t i = values.size() ; i > 1 ; --i)
                    std::swap(values[i - 1], values[below(i)]);
            }

            /// Uniform real in [0, 1) from the top 53 bits.
            auto uniform() -> double
            {
                return static_cast<double>(_engine() >> 11) * 0x1.0p-53;
            }
    };

    /// splitmix64 finaliser applied to (master, index); gives schedule-independent per-worker and
    /// per-trial seeds.
    inline auto derive_seed(std::uint64_t master, std::uint64_t index) -> std::uint64_t
    {
        std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
}
