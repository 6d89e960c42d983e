#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace permix {

// Worker-pool size: explicit flag, then PERMIX_THREADS, then the hardware.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PERMIX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(chunk_index, begin, end) over [0, total) split into `chunks` nearly
// equal ranges on `threads` workers.  Caller merges per-chunk results in
// chunk order so the outcome is independent of the worker count.
inline void parallel_chunks(long long total, int chunks, int threads,
                            const std::function<void(int, long long, long long)>& fn) {
    if (total <= 0 || chunks < 1) return;
    threads = std::max(1, std::min(threads, chunks));
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int c = next.fetch_add(1);
            if (c >= chunks) return;
            long long begin = total * c / chunks;
            long long end = total * (c + 1) / chunks;
            if (begin < end) fn(c, begin, end);
        }
    };
    if (threads == 1) {
        worker();
        return;
    }
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace permix
