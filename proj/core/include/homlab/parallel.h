#pragma once

#include <functional>

namespace homlab {

/// Number of worker threads: HOMLAB_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int worker_count();

/// Runs body(i) for every i in [begin, end) on up to worker_count() threads.
/// Indices are handed out dynamically; body must only write to state owned by
/// index i. The first exception thrown by any call is rethrown.
void parallel_for(int begin, int end, const std::function<void(int)> &body);

}  // namespace homlab
