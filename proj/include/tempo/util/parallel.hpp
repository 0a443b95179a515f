#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace tempo {

// Applies fn(i) for i in [0, n) across up to `threads` workers. Each slot of
// the result vector is written by exactly one worker, so output order is
// independent of scheduling.
template <class Result>
std::vector<Result> parallel_map(std::size_t n, int threads,
                                 const std::function<Result(std::size_t)>& fn) {
  std::vector<Result> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      out[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int k = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  pool.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace tempo
