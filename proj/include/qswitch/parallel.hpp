#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qswitch {

// Worker count: QSWITCH_THREADS overrides, otherwise available parallelism.
inline int default_worker_count() {
    if (const char* env = std::getenv("QSWITCH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Splits [begin, end) into one contiguous chunk per worker and runs
// fn(worker_index, chunk_begin, chunk_end) on each. Callers keep per-worker
// accumulators and merge associatively afterwards, so results do not depend
// on scheduling order. The first worker exception is rethrown.
template <typename Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, int workers, Fn fn) {
    std::uint64_t total = end - begin;
    if (workers < 1) workers = 1;
    if (std::uint64_t(workers) > total && total > 0) workers = int(total);
    if (total == 0) return;
    if (workers == 1) {
        fn(0, begin, end);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);

    std::uint64_t chunk = total / workers;
    std::uint64_t extra = total % workers;
    std::uint64_t cursor = begin;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (std::uint64_t(w) < extra ? 1 : 0);
        std::uint64_t lo = cursor;
        std::uint64_t hi = cursor + len;
        cursor = hi;
        pool.emplace_back([&, w, lo, hi] {
            try {
                fn(w, lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace qswitch
