#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tsym {

/// Worker count: hardware concurrency, capped by TSYM_THREADS when set.
inline int thread_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("TSYM_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
    }
  }
  return n;
}

/// Calls f(k) for k in [0, n) on up to thread_count() threads. Results must be
/// written to per-index slots by f; the first exception is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const int workers = static_cast<int>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) f(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t k; (k = next.fetch_add(1)) < n;) {
        try {
          f(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace tsym
