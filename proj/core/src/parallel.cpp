#include "interlace/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace interlace {

std::size_t worker_count() {
  if (const char* env = std::getenv("INTERLACE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_blocks(std::uint64_t total,
                     const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body,
                     std::size_t workers) {
  if (workers == 0) workers = worker_count();
  if (total == 0) return;
  // Small ranges, or a single worker, run inline.
  if (workers == 1 || total < 4096) {
    body(0, total, 0);
    return;
  }
  // Power-of-two block size so each block fixes the high-order index bits.
  const std::uint64_t target_blocks = std::bit_ceil(static_cast<std::uint64_t>(workers) * 8);
  const std::uint64_t block = std::max<std::uint64_t>(1, std::bit_ceil(total / target_blocks));
  const std::uint64_t blocks = (total + block - 1) / block;
  workers = static_cast<std::size_t>(std::min<std::uint64_t>(workers, blocks));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](std::size_t worker) {
    try {
      for (std::uint64_t b = next++; b < blocks; b = next++) {
        const std::uint64_t begin = b * block;
        body(begin, std::min(total, begin + block), worker);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace interlace
