// Minimal fan-out helper for independent (cell, prime) tasks.  Results must
// be written into preallocated slots keyed by task index, never merged by
// arrival order, so the output is deterministic for any worker count.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sprglue {

inline int worker_count() {
    if (const char* env = std::getenv("SPRGLUE_WORKERS")) {
        int k = std::atoi(env);
        if (k >= 1 && k <= 64) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

template <class Fn>
void parallel_for(int ntasks, Fn fn) {
    int workers = std::min(worker_count(), ntasks);
    if (workers <= 1) {
        for (int i = 0; i < ntasks; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= ntasks) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sprglue
