#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace dickesim {

// Runs body(i) for i in [0, n) on up to hardware_concurrency threads,
// partitioned into contiguous chunks.  Callers write results into
// preallocated slots indexed by i, so output order is deterministic
// regardless of scheduling.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  if (n == 0) return;
  unsigned workers = std::thread::hardware_concurrency();
  if (workers < 2 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (workers > n) workers = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace dickesim
