#pragma once

// Deterministic parallel loop: static chunking over a fixed index range, so
// results are identical for any thread count. Thread count comes from the
// BECRANK_THREADS environment variable, else hardware concurrency.

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace becrank {

inline unsigned thread_count() {
    if (const char* env = std::getenv("BECRANK_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// f(i) is called exactly once for each i in [0, n); iterations must write to
// disjoint locations.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned threads = thread_count();
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace becrank
