#ifndef EPSICOMP_PARALLEL_HPP
#define EPSICOMP_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace epsicomp {

// Static contiguous partition of [0, count) over at most `threads` workers.
// Callers must write results into disjoint, pre-sized slots so the outcome is
// independent of the partitioning; any ordered reduction happens afterwards.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t, std::size_t)>& chunk) {
    if (count == 0) return;
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, threads), count);
    if (workers == 1) {
        chunk(0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t base = count / workers;
    const std::size_t extra = count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t len = base + (w < extra ? 1 : 0);
        pool.emplace_back(chunk, begin, begin + len);
        begin += len;
    }
    for (auto& t : pool) t.join();
}

}  // namespace epsicomp

#endif
