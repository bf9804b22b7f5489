#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hsm {

/// Process-wide cap on worker threads (the CLI's --threads flag).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Calls fn(i) for i in [0, n). Work is split into contiguous blocks; fn must
/// only write to slots owned by index i, so results do not depend on the
/// thread count.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(max_threads(), n / 256 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
}

}  // namespace hsm
