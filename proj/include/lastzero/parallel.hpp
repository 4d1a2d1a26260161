#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace lastzero {

// Worker cap from LASTZERO_THREADS (0 or unset = hardware concurrency).
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("LASTZERO_THREADS")) {
    long requested = std::strtol(env, nullptr, 10);
    if (requested > 0) return static_cast<int>(requested);
  }
  return static_cast<int>(hw);
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Work must be a pure
// function of the index (outputs written to per-index slots or reduced over
// integer accumulators) so results do not depend on the worker count.
// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_for_range(long n, Fn&& fn) {
  if (n <= 0) return;
  const long workers = std::min<long>(worker_count(), n);
  if (workers <= 1) {
    fn(0L, n);
    return;
  }
  const long chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    const long begin = w * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace lastzero
