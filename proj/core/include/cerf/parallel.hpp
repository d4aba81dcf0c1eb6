#pragma once

#include <cstddef>
#include <functional>

namespace cerf {

/// Worker count from CERF_FORGE_THREADS (unset or 0 means hardware concurrency).
std::size_t worker_count();

/// Runs body(worker, begin, end) over contiguous chunks of [0, n).
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

} // namespace cerf
