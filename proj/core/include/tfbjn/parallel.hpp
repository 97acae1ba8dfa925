#pragma once

#include <cstddef>
#include <functional>

namespace tfbjn {

/// Number of worker threads: TFBJN_THREADS if set, hardware concurrency otherwise.
std::size_t worker_count();

/// Runs fn(i) for i in [0, n). Iterations must be independent; results are
/// identical for any worker count (each index is computed by exactly one
/// sequential call). Nested calls degrade to serial execution.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tfbjn
