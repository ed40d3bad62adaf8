#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rclat {

/// Execution path for the data-parallel kernels. `serial` is the reference
/// implementation the tests compare against; both paths produce identical,
/// index-ordered output.
enum class Exec { serial, parallel };

/// Calls `body(i)` for every i in [0, count). Under Exec::parallel the loop is
/// distributed with a dynamic OpenMP schedule; the first exception thrown by any
/// iteration is rethrown on the calling thread after the loop drains.
template <class Body>
void for_each_index(Exec exec, std::size_t count, Body&& body) {
  if (exec == Exec::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock{failure_mutex};
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

inline void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace rclat
