#include "matwb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace matwb {

namespace {
std::atomic<int> g_threadCap{0};
}

void setThreadCap(int threads) { g_threadCap.store(threads < 0 ? 0 : threads); }

int threadCap() {
  int cap = g_threadCap.load();
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  return cap > 0 ? std::min(cap, hw) : hw;
}

void parallelFor(size_t n, const std::function<void(size_t, size_t)>& body) {
  size_t workers = static_cast<size_t>(threadCap());
  if (workers <= 1 || n < 1024) {
    body(0, n);
    return;
  }
  workers = std::min(workers, (n + 1023) / 1024);
  size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    size_t lo = w * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace matwb
