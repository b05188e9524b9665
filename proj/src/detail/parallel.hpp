#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace ramseykit::detail {

// Runs fn(i) for i in [0, n) across `degree` threads in contiguous chunks.
// Callers store per-index results and reduce them in index order afterwards,
// which keeps every verdict independent of the parallelism degree.
inline void parallel_for(std::size_t n, int degree, const std::function<void(std::size_t)>& fn) {
    if (degree <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(degree), n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

} // namespace ramseykit::detail
