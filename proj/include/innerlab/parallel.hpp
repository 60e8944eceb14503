#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace innerlab {

// Worker cap: INNERLAB_THREADS if set, else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("INNERLAB_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Number of chunks parallel_chunks will use for a given workload.
inline std::size_t parallel_chunk_count(std::size_t n, std::size_t min_chunk = 1024) {
    if (n == 0) return 0;
    unsigned workers = thread_budget();
    std::size_t chunks =
        std::max<std::size_t>(1, std::min<std::size_t>(workers * 4, n / min_chunk));
    std::size_t step = (n + chunks - 1) / chunks;
    return (n + step - 1) / step;
}

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed chunks.
// Chunk boundaries do not depend on the worker count, so any reduction done
// per chunk and combined in chunk order is deterministic.
inline void parallel_chunks(std::size_t n,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                            std::size_t min_chunk = 1024) {
    if (n == 0) return;
    unsigned workers = thread_budget();
    std::size_t chunks = parallel_chunk_count(n, min_chunk);
    std::size_t step = (n + chunks - 1) / chunks;

    if (workers == 1 || chunks == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            fn(c, c * step, std::min(n, (c + 1) * step));
        return;
    }

    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex guard;
    auto body = [&]() {
        for (;;) {
            std::size_t c;
            {
                std::lock_guard<std::mutex> lock(guard);
                if (next >= chunks) return;
                c = next++;
            }
            fn(c, c * step, std::min(n, (c + 1) * step));
        }
    };
    for (unsigned w = 0; w < std::min<std::size_t>(workers, chunks); ++w)
        pool.emplace_back(body);
    for (auto& t : pool) t.join();
}

}  // namespace innerlab
