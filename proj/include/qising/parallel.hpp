#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace qising {

/// Runs fn(begin, end) over contiguous chunks of [0, n). Results must be
/// written by index into preallocated storage; the split is deterministic and
/// per-item work is independent, so output is identical for any thread count.
template <typename Fn>
void parallel_for_chunks(std::size_t n, int parallelism, Fn&& fn) {
    if (n == 0) return;
    int workers = std::max(1, parallelism);
    if (workers == 1 || n < 2048) {
        fn(std::size_t{0}, n);
        return;
    }
    std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        std::size_t b = std::min(n, w * chunk);
        std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        threads.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace qising
