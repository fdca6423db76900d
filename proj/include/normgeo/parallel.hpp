#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace normgeo {

/// Worker cap: NORMGEO_THREADS when set, else hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("NORMGEO_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<std::size_t>(n);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Runs fn(i) for i in [0, count). Work items must be independent; callers
/// store results by index and reduce sequentially, so the outcome does not
/// depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::size_t workers = worker_count();
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace normgeo
