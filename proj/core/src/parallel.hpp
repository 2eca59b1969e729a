#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace rootex::detail {

// Chunked parallel loop over [0, n). Workers get disjoint contiguous ranges,
// so per-element writes need no synchronization and results are independent
// of the thread count. threads == 0 means hardware concurrency.
template <typename Fn>
void parallel_for(std::int64_t n, int threads, Fn&& fn) {
  if (n <= 0) return;
  int workers = threads > 0 ? threads : int(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (std::int64_t(workers) > n) workers = int(n);
  if (workers == 1) {
    fn(std::int64_t(0), n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = n * w / workers;
    const std::int64_t hi = n * (w + 1) / workers;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rootex::detail
