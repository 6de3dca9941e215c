#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace interlace {

/// Worker count: INTERLACE_THREADS when set to a positive integer, else the
/// machine's available parallelism (at least 1).
std::size_t worker_count();

/// Splits [0, total) into contiguous blocks aligned on high-order bits of the
/// index and runs body(begin, end, worker) across worker_count() threads.
/// Each worker index is used by one thread at a time, so per-worker
/// accumulators need no locking. Exceptions from body are rethrown.
void parallel_blocks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body,
                     std::size_t workers = 0);

}  // namespace interlace
