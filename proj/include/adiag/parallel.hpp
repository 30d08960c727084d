#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace adiag {

// Runs body(i) for i in [0, n), splitting the index range over hardware
// threads. Results must be written into per-index slots by the caller;
// reductions are then performed serially in index order, so parallel and
// single-threaded runs produce bit-identical numbers. The first exception
// thrown by any body is rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         unsigned max_threads = 0) {
  unsigned hw = max_threads ? max_threads : std::thread::hardware_concurrency();
  if (hw <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(hw, n));
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += nthreads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace adiag
