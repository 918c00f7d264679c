#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace lucanomial {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items must be
/// independent; result placement is the caller's responsibility (index into a
/// preallocated buffer for deterministic output).
template <typename Fn>
void parallel_for(unsigned jobs, std::uint64_t count, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace lucanomial
