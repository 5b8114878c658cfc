#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace jumpcp {

// Runs body(0..count-1) across up to n_threads workers. Work units must be
// independent and write only to their own output slots; under that contract
// results are identical for any thread count. The first exception thrown by
// a work unit is rethrown on the calling thread.
inline void parallel_for(std::size_t count, unsigned n_threads,
                         const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (n_threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace jumpcp
