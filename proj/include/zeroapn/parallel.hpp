#pragma once

#include <cstddef>
#include <functional>

namespace zeroapn {

// Worker count: ZEROAPN_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, count). Each index runs exactly once; callers write
// results into per-index slots so the output order never depends on scheduling.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

} // namespace zeroapn
