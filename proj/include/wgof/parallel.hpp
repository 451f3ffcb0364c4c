#pragma once

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wgof {

/// Worker count for a request of `requested` threads: positive values are
/// taken as-is, 0 defers to the GOF_THREADS environment variable (where 0
/// or unset means hardware concurrency).
inline int thread_budget(int requested) {
  if (requested > 0) return requested;
  long from_env = 0;
  if (const char* env = std::getenv("GOF_THREADS")) {
    from_env = std::strtol(env, nullptr, 10);
  }
  if (from_env > 0) return static_cast<int>(from_env);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(i) for i in [0, count) across `threads` workers. Results must
/// be written to per-index slots; the assignment of indices to workers is
/// not observable then. The first exception thrown by any worker is
/// rethrown on the caller.
template <class Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += threads) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace wgof
