#ifndef GSQ_PARALLEL_HPP
#define GSQ_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace gsq::detail {

// Runs fn(begin, end) over contiguous chunks of [0, count) on the given
// number of worker threads. threads <= 1 executes inline. fn must be safe
// to call concurrently on disjoint ranges.
template <typename Fn>
void parallel_for_chunks(std::size_t count, int threads, Fn&& fn) {
    if (count == 0)
        return;
    const std::size_t workers =
        std::min<std::size_t>(std::max(threads, 1), count);
    if (workers <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace gsq::detail

#endif
