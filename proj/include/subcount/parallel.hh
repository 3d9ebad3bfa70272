#pragma once

#include <subcount/count.hh>

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace subcount
{
    // Sums body(i) for i in [0, count) on up to `threads` workers. Exact
    // addition makes the result independent of the schedule.
    template <typename Body>
    auto parallel_sum(std::size_t count, unsigned threads, Body body) -> Integer
    {
        threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
        if (threads == 1) {
            Integer total = 0;
            for (std::size_t i = 0; i < count; ++i)
                total += body(i);
            return total;
        }

        std::vector<Integer> partial(threads);
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += threads)
                        partial[w] += body(i);
                }
                catch (...) {
                    std::lock_guard lock{failure_mutex};
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto & worker : workers)
            worker.join();
        if (failure)
            std::rethrow_exception(failure);
        Integer total = 0;
        for (auto & p : partial)
            total += p;
        return total;
    }

    // Runs body(i) for every i, storing nothing; exceptions propagate.
    template <typename Body>
    auto parallel_for(std::size_t count, unsigned threads, Body body) -> void
    {
        parallel_sum(count, threads, [&](std::size_t i) -> Integer {
            body(i);
            return 0;
        });
    }
}
