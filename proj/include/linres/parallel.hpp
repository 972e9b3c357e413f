#pragma once
// Minimal thread-pool-free parallel loop.  The worker count is the hardware
// concurrency capped by the LINRES_THREADS environment variable.

#include <functional>

namespace linres {

/// Number of worker threads; at least 1.
int thread_count();

/// Calls fn(i) for i in [0, n).  Exceptions from workers are rethrown on the
/// calling thread (the first one wins).
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace linres
