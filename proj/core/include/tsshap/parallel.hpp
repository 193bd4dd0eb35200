#ifndef TSSHAP_PARALLEL_HPP
#define TSSHAP_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace tsshap {

inline int resolve_workers(int n_workers) {
    if (n_workers > 0) return n_workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Static range split over [0, n). Each worker owns a contiguous chunk, so
// writes to per-index slots are disjoint and results do not depend on the
// worker count. `fn(begin, end, worker)` is invoked once per chunk.
template <typename Fn>
void parallel_chunks(std::int64_t n, int n_workers, Fn&& fn) {
    if (n <= 0) return;
    int workers = resolve_workers(n_workers);
    if (static_cast<std::int64_t>(workers) > n) workers = static_cast<int>(n);
    if (workers <= 1) {
        fn(std::int64_t{0}, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t base = n / workers;
    const std::int64_t rem = n % workers;
    std::int64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        const std::int64_t len = base + (w < rem ? 1 : 0);
        const std::int64_t end = begin + len;
        pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

// Convenience wrapper when the body only needs the index.
template <typename Fn>
void parallel_for(std::int64_t n, int n_workers, Fn&& fn) {
    parallel_chunks(n, n_workers, [&fn](std::int64_t begin, std::int64_t end, int) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
    });
}

}  // namespace tsshap

#endif
