#pragma once

// Static-partition parallel loop. Each index is processed exactly once and
// writes only its own output slot, so results do not depend on the thread
// count.

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace eulerdisc {

inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1u : n;
}

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace eulerdisc
