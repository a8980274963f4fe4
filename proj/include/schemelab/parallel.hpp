#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace schemelab {

/// Worker count: hardware concurrency, capped by SCHEMELAB_THREADS if set.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("SCHEMELAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

/// Run fn(row) for rows [0, rows); each row is written by exactly one
/// worker, so the assembled result is independent of scheduling.
inline void parallel_rows(int rows, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), rows > 0 ? rows : 1);
    if (workers <= 1) {
        for (int r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([=, &fn]() {
            for (int r = w; r < rows; r += workers) fn(r);
        });
    for (auto& t : pool) t.join();
}

}  // namespace schemelab
