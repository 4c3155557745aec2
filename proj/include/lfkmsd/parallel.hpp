#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace lfkmsd {

/// Hardware thread count, at least 1. Honours LFKMSD_THREADS when set to a positive integer.
unsigned default_thread_count() noexcept;

/// Splits [0, count) into `workers` contiguous chunks and runs
/// `fn(worker, begin, end)` for each, one thread per chunk, returning once all
/// have finished. Worker 0 runs on the calling thread. The first exception
/// thrown by any worker is rethrown after the join.
template <typename Fn>
void run_chunked(unsigned workers, std::size_t count, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count <= 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  const std::size_t base = count / workers;
  const std::size_t extra = count % workers;
  auto bounds = [&](unsigned w) {
    const std::size_t begin = w * base + std::min<std::size_t>(w, extra);
    return std::pair{begin, begin + base + (w < extra ? 1 : 0)};
  };

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          const auto [b, e] = bounds(w);
          fn(w, b, e);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    try {
      const auto [b, e] = bounds(0);
      fn(0u, b, e);
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace lfkmsd
