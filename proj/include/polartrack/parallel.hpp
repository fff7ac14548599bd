#pragma once

#include <cstddef>
#include <functional>

namespace polartrack {

// Number of worker threads to use when the caller does not say otherwise:
// the POLARTRACK_THREADS environment variable if set, else the hardware
// concurrency, never less than 1.
int default_threads();

// Runs fn(begin, end) over disjoint chunks of [0, n), using up to `threads`
// workers. Chunk boundaries do not depend on the thread count, and callers
// write results into per-index slots, so output is identical for any number
// of threads.
void parallel_chunks(std::size_t n, int threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace polartrack
