#include "synsq/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace synsq {

namespace {

std::atomic<std::size_t> g_max_threads{0};

}  // namespace

void set_max_threads(std::size_t count) { g_max_threads.store(count); }

std::size_t max_threads() {
    const std::size_t cap = g_max_threads.load();
    if (cap != 0) return cap;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for_chunks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    const std::size_t workers = std::min(max_threads(), count);
    if (workers <= 1) {
        body(0, count);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace synsq
