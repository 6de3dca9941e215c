#include "interlace/parallel.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <mutex>
#include <random>
#include <stdexcept>
#include <vector>

#include "interlace/graph.hpp"
#include "interlace/interlace.hpp"

namespace interlace {
namespace {

TEST(ParallelBlocks, CoversEveryIndexOnce) {
  for (std::uint64_t total : {0ULL, 1ULL, 4095ULL, 4096ULL, 100000ULL, (1ULL << 17) + 3}) {
    std::vector<int> hits(total, 0);
    std::mutex m;
    parallel_blocks(
        total,
        [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
          std::lock_guard lock(m);
          for (auto i = begin; i < end; ++i) ++hits[i];
        },
        4);
    for (std::uint64_t i = 0; i < total; ++i) ASSERT_EQ(hits[i], 1) << "index " << i << " of " << total;
  }
}

TEST(ParallelBlocks, WorkerIndexInRange) {
  std::mutex m;
  std::vector<std::size_t> seen;
  parallel_blocks(
      1 << 16,
      [&](std::uint64_t, std::uint64_t, std::size_t w) {
        std::lock_guard lock(m);
        seen.push_back(w);
      },
      3);
  for (auto w : seen) EXPECT_LT(w, 3U);
}

TEST(ParallelBlocks, RethrowsWorkerException) {
  EXPECT_THROW(parallel_blocks(
                   1 << 16,
                   [](std::uint64_t begin, std::uint64_t, std::size_t) {
                     if (begin > 0) throw std::runtime_error("boom");
                   },
                   4),
               std::runtime_error);
}

TEST(WorkerCount, ReadsEnvironment) {
  ::setenv("INTERLACE_THREADS", "3", 1);
  EXPECT_EQ(worker_count(), 3U);
  ::setenv("INTERLACE_THREADS", "garbage", 1);
  EXPECT_GE(worker_count(), 1U);
  ::unsetenv("INTERLACE_THREADS");
  EXPECT_GE(worker_count(), 1U);
}

TEST(WorkerCount, ResultIndependentOfWorkers) {
  std::mt19937_64 rng(51);
  const SimpleGraph g = random_graph(16, 0.5, rng);
  ::setenv("INTERLACE_THREADS", "1", 1);
  const UniPoly one = qn_closed(g);
  const BiPoly one2 = q2_closed(g);
  ::setenv("INTERLACE_THREADS", "5", 1);
  EXPECT_EQ(qn_closed(g), one);
  EXPECT_EQ(q2_closed(g), one2);
  ::unsetenv("INTERLACE_THREADS");
}

}  // namespace
}  // namespace interlace
