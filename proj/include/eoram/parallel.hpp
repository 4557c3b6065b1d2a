#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace eoram
{
    /// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index runs exactly once; the
    /// first exception thrown is rethrown on the calling thread.
    template <typename Fn_>
    auto parallel_for(int count, int threads, Fn_ && fn) -> void
    {
        threads = std::clamp(threads, 1, std::max(count, 1));
        if (threads == 1) {
            for (int i = 0 ; i < count ; ++i)
                fn(i);
            return;
        }

        std::atomic<int> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> pool;
            for (int w = 0 ; w < threads ; ++w)
                pool.emplace_back([&] {
                    for (int i = next++ ; i < count ; i = next++) {
                        try {
                            fn(i);
                        }
                        catch (...) {
                            std::lock_guard<std::mutex> lock(failure_mutex);
                            if (! failure)
                                failure = std::current_exception();
                            next = count;
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    /// Lowest i in [0, count) with pred(i) true, or -1. Indices above the best hit found so far
    /// are skipped, so the answer equals the sequential scan whatever the schedule.
    template <typename Pred_>
    auto parallel_find_first(int count, int threads, Pred_ && pred) -> int
    {
        std::atomic<int> best{std::numeric_limits<int>::max()};
        parallel_for(count, threads, [&] (int i) {
            if (i > best.load())
                return;
            if (pred(i)) {
                int current = best.load();
                while (i < current && ! best.compare_exchange_weak(current, i))
                    ;
            }
        });
        int b = best.load();
        return b == std::numeric_limits<int>::max() ? -1 : b;
    }
}
