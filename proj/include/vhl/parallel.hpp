#pragma once

#include <cstdint>
#include <functional>

namespace vhl {

/// Thread budget resolved from the VHL_THREADS environment variable.
/// Unset or 0 means automatic (hardware concurrency); any positive value
/// caps the number of worker threads. Read once per process.
int thread_budget();

/// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
/// worker. Falls back to a single inline call when the budget is 1 or the
/// range is smaller than `grain`. Chunk boundaries depend only on n and
/// the budget, and chunks never overlap, so row-parallel fills stay
/// deterministic.
void parallel_for(std::int64_t n, std::int64_t grain,
                  const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace vhl
