#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace taut {

// Worker count used by the parallel loops; 0 means hardware concurrency.
void set_threads(int k);
int thread_count();

// Runs f(i) for i in [0, n) on the worker pool. Callers write results into
// per-index slots and merge them in index order, so output does not depend
// on scheduling. The first exception thrown by any f is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    const int workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace taut
