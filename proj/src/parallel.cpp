#include "llf/parallel.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace llf {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int begin, int end, int threads,
                  const std::function<void(int, int)>& body) {
  const int n = end - begin;
  if (n <= 0) return;
  threads = std::min(resolve_threads(threads), n);
  if (threads <= 1) {
    body(begin, end);
    return;
  }
  const int chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) {
    int lo = begin + t * chunk;
    int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  body(begin, std::min(end, begin + chunk));
  for (auto& th : pool) th.join();
}

}  // namespace llf
