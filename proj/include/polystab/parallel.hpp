#pragma once

#include <cstddef>
#include <functional>

namespace polystab {

// Worker count: POLYSTAB_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once;
// callers write results into per-index slots so output order never depends
// on scheduling. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace polystab
