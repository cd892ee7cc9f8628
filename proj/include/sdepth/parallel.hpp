#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace sdepth {

// Runs body(begin, end) over [0, count) split into contiguous chunks. Chunk boundaries depend
// only on `count` and `grain`, never on `threads`, so per-chunk results merged in chunk order are
// identical for every thread count.
template <typename Body>
void parallel_chunks(std::size_t count, std::size_t grain, unsigned threads, Body&& body)
{
    if (count == 0)
        return;
    grain = std::max<std::size_t>(grain, 1);
    const std::size_t chunks = (count + grain - 1) / grain;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(std::max(threads, 1u), chunks));

    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = c * grain;
        body(c, begin, std::min(count, begin + grain));
    };

    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            run_chunk(c);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t c = w; c < chunks; c += workers)
                    run_chunk(c);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, std::size_t grain)
{
    grain = std::max<std::size_t>(grain, 1);
    return (count + grain - 1) / grain;
}

} // namespace sdepth
