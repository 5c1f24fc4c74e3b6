#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hosoya {

// Apply fn(i) for i in [0, count) across `jobs` workers (0 = hardware
// concurrency). Work is handed out in fixed strides so results written to
// slot i are identical for any job count; the first exception is rethrown.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    unsigned workers = jobs > 0 ? (unsigned)jobs : std::thread::hardware_concurrency();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    if ((std::size_t)workers > count) workers = (unsigned)count;
    std::vector<std::thread> pool;
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < count; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace hosoya
