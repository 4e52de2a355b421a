#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace annealgap {

// Sweep parallelism cap: ANNEALGAP_THREADS env var, else hardware cores.
inline int max_threads() {
    if (const char* env = std::getenv("ANNEALGAP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Runs body(i) for i in [0, n) across worker threads; body must be safe for
// concurrent invocation on distinct indices.
template <class Body>
void parallel_for(int n, Body body) {
    int workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace annealgap
