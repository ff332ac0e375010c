#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace coneatoms {

// Worker count: min(hardware, CONEATOMS_THREADS) with a floor of 1.
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CONEATOMS_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

// Static block partition of [0, count). Results must be written to
// disjoint slots; reductions happen afterwards in index order so the
// outcome is independent of thread scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
    int nw = worker_count();
    if (nw <= 1 || count < 2048) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nw);
    std::size_t chunk = (count + nw - 1) / nw;
    for (int t = 0; t < nw; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace coneatoms
