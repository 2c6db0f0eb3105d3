#include "operp/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace operp {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() { return g_max_threads.load(); }

namespace detail {

int resolved_threads() {
  int cap = g_max_threads.load();
#ifdef _OPENMP
  int hw = omp_get_max_threads();
  if (cap == 0 || cap > hw) return hw;
  return cap;
#else
  (void)cap;
  return 1;
#endif
}

}  // namespace detail

}  // namespace operp
