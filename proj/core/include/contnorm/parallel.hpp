#pragma once

#include <cstddef>
#include <exception>
#include <future>
#include <thread>
#include <vector>

namespace contnorm {

/// Runs fn(i) for i in [0, n) across a small async pool. Each call must
/// write only to its own output slot; results are then independent of
/// scheduling, which keeps downstream reductions deterministic. The first
/// exception thrown by any job is rethrown after all jobs finish.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  const std::size_t hw = std::max<std::size_t>(std::thread::hardware_concurrency(), 1);
  const std::size_t workers = std::min(hw, n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&fn, w, workers, n]() {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    }));
  }
  std::exception_ptr first;
  for (auto& f : futures) {
    try {
      f.get();
    } catch (...) {
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace contnorm
