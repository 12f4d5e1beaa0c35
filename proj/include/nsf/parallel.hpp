#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace nsf {

/// Worker cap: NSF_THREADS env var, else hardware concurrency.
inline int max_workers() {
    if (const char* env = std::getenv("NSF_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, count) on up to max_workers() threads.
/// Work is split into fixed contiguous chunks so any per-chunk results
/// a caller accumulates can be combined in index order, independent of
/// scheduling (keeps reductions bit-reproducible).
inline void parallel_for(long count, const std::function<void(long)>& body) {
    if (count <= 0) return;
    int workers = std::min<long>(max_workers(), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long lo = w * chunk;
        long hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (long i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace nsf
