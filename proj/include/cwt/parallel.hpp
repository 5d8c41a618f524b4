#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cwt {

/// Index-parallel map with results delivered in input order. The worker
/// function must be pure; each index is written by exactly one thread.
template <typename T>
std::vector<T> parallel_map(int count, const std::function<T(int)>& fn) {
  std::vector<T> out(static_cast<size_t>(count));
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned nthreads = std::max(1u, std::min(hw ? hw : 1u, static_cast<unsigned>(count)));
  if (nthreads == 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (unsigned w = 0; w < nthreads; ++w) {
    workers.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) out[i] = fn(i);
    });
  }
  for (auto& th : workers) th.join();
  return out;
}

}  // namespace cwt
