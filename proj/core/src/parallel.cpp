#include "tfbjn/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tfbjn {

namespace {
thread_local bool inside_worker = false;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("TFBJN_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) return std::min<std::size_t>(static_cast<std::size_t>(v), 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? std::min<std::size_t>(hw, 64) : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = inside_worker ? 1 : std::min(worker_count(), n);
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = n * w / workers;
    std::size_t hi = n * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      inside_worker = true;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
      inside_worker = false;
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tfbjn
