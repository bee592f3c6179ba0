#ifndef CAUCHYLAB_SRC_PARALLEL_HPP
#define CAUCHYLAB_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cauchylab::detail {

// Runs body(i) for i in [0, n) over contiguous chunks, one per hardware
// thread.  body must only write state owned by index i.
template <typename Body>
void parallel_for(std::ptrdiff_t n, Body&& body) {
  const auto threads = static_cast<std::ptrdiff_t>(std::max(1u, std::thread::hardware_concurrency()));
  if (threads == 1 || n < 2 * threads) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::ptrdiff_t chunk = (n + threads - 1) / threads;
  {
    std::vector<std::jthread> pool;
    for (std::ptrdiff_t start = 0; start < n; start += chunk) {
      pool.emplace_back([&, start] {
        try {
          for (std::ptrdiff_t i = start; i < std::min(n, start + chunk); ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cauchylab::detail

#endif  // CAUCHYLAB_SRC_PARALLEL_HPP
