#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace clarke {

// Worker cap from CLARKE_KIT_THREADS (output never depends on it: parallel
// loops only write disjoint, index-addressed slots).
inline unsigned worker_count() {
  if (const char* env = std::getenv("CLARKE_KIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

// Runs fn over contiguous chunks of [0, n).
inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 256) {
    fn(0, n);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace clarke
