#pragma once

#include <cstddef>
#include <functional>

namespace recot {

// RECOT_THREADS if set and positive, else hardware_concurrency (at least 1).
int worker_count();

// Runs fn(i) for i in [0, n) on up to `workers` threads. Indices are handed
// out in contiguous blocks; callers that need a deterministic result write to
// slot i and reduce afterwards in index order. The first exception thrown by
// any fn is rethrown once every worker has stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int workers = 0);

}  // namespace recot
