#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

namespace operp {

// Execution policy for the data-parallel kernels. The serial path is the
// reference implementation: a plain loop over the same per-index body. The
// parallel path must produce bit-identical results, so workers only write
// disjoint slots and reductions happen in index order afterwards.
enum class Exec { serial, parallel };

// Global thread cap for the parallel paths. 0 means "hardware default".
void set_max_threads(int n);
int max_threads();

namespace detail {
int resolved_threads();
}

// Runs fn(0), ..., fn(n-1). Exceptions thrown by the body are rethrown on
// the caller thread; with several failures the smallest failing index wins,
// so error reporting does not depend on the schedule.
template <class Fn>
void indexed_loop(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel && detail::resolved_threads() > 1 && n > 1) {
    std::atomic<std::size_t> first_error{n};
    std::exception_ptr error;
    std::mutex guard;
#pragma omp parallel for schedule(dynamic) num_threads(detail::resolved_threads())
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      const std::size_t idx = static_cast<std::size_t>(i);
      if (first_error.load(std::memory_order_relaxed) < idx) continue;
      try {
        fn(idx);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (idx < first_error.load()) {
          first_error.store(idx);
          error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace operp
