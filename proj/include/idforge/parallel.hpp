#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idforge {

// Which implementation of a kernel to run. `serial` is the reference path
// kept for tests and benchmarks; results are identical by construction.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Runs fn(i) for i in [0, n). Exceptions thrown by fn are collected per
/// index and the one with the lowest index is rethrown, so the observable
/// behaviour does not depend on the schedule.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn, Exec exec = Exec::parallel,
                    std::size_t min_parallel = 2) {
  if (exec == Exec::serial || n < min_parallel) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace idforge
