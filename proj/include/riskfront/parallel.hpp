#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace riskfront {

// Worker count for a request: 0 means "as many as allowed". The
// RISKFRONT_THREADS environment variable caps the result.
unsigned resolve_threads(unsigned requested = 0);

/// Runs body(chunk) for every chunk in [0, chunks) on up to `threads` workers.
/// Chunks are claimed in order; callers store per-chunk results and merge them
/// in chunk order, so output never depends on the worker count.
template <typename Body>
void for_each_chunk(std::size_t chunks, unsigned threads, Body&& body)
{
    if (threads <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            body(c);
        }
        return;
    }
    std::mutex mutex;
    std::size_t next = 0;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t c;
            {
                std::lock_guard lock(mutex);
                if (next >= chunks || failure) return;
                c = next++;
            }
            try {
                body(c);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t count = threads < chunks ? threads : chunks;
        for (std::size_t t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace riskfront
