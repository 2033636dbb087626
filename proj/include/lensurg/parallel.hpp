#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lensurg {

/// out[i] = f(items[i]) on up to `jobs` threads. Workers claim indices from a
/// shared counter and write into their own slot, so the output order never
/// depends on scheduling. The first exception thrown is rethrown.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, int jobs, F f) -> std::vector<decltype(f(items.front()))> {
    using R = decltype(f(items.front()));
    std::vector<R> out(items.size());
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), items.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                out[i] = f(items[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = items.size();
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();
    if (error) std::rethrow_exception(error);
    return out;
}

/// Hardware concurrency, at least 1.
inline int default_jobs() { return std::max(1, static_cast<int>(std::thread::hardware_concurrency())); }

}  // namespace lensurg
