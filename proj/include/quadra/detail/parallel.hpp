#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace quadra::detail {

// Splits [0, n) into contiguous chunks and runs fn(begin, end) on each, one
// chunk per worker. Workers must write only to disjoint per-index slots, so
// results are identical to sequential execution regardless of thread count.
// threads == 0 picks the hardware concurrency.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || n < 4096) {
        if (n > 0) fn(std::size_t{0}, n);
        return;
    }
    const std::size_t worker_count = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + worker_count - 1) / worker_count;
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([begin, end, &fn] { fn(begin, end); });
    }
    for (auto& worker : workers) worker.join();
}

}  // namespace quadra::detail
