#pragma once

#include <functional>

namespace semap {

// Worker count: SEMAP_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int thread_count();

// Runs body(begin, end) over a split of [0, n) into contiguous chunks, one per
// worker. Nested calls run inline. The first exception thrown by any chunk is
// rethrown after all workers finish.
void parallel_chunks(int n, const std::function<void(int, int)>& body);

// Calls body(i) for every i in [0, n), distributing indices dynamically.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace semap
