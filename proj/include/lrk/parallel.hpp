#pragma once

#include <cstddef>
#include <functional>

namespace lrk {

/// Worker count from LRK_WORKERS if set to a positive integer, else `fallback`
/// if positive, else the hardware concurrency (at least 1).
int resolve_workers(int fallback);

/// Calls body(i) for i in [0, n) on up to `workers` threads. Each index is
/// handled exactly once; the first exception thrown by any call is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& body);

}  // namespace lrk
