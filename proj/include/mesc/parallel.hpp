#pragma once

#include <cstddef>
#include <functional>

namespace mesc {

/// Worker count: MESC_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_budget();

/// Runs fn(i) for every i in [0, count), spread over thread_budget() worker
/// threads. The first exception thrown by any invocation is rethrown on the
/// calling thread after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mesc
