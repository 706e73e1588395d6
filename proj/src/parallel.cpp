#include "arcmpc/parallel.hpp"

#include <atomic>

namespace arcmpc {

namespace {
std::atomic<int> g_threads{
#ifdef _OPENMP
    0 // resolved lazily from omp_get_max_threads()
#else
    1
#endif
};
} // namespace

int parallel_threads() {
  int t = g_threads.load(std::memory_order_relaxed);
  if (t <= 0) {
#ifdef _OPENMP
    t = omp_get_max_threads();
#else
    t = 1;
#endif
    g_threads.store(t, std::memory_order_relaxed);
  }
  return t;
}

void set_parallel_threads(int threads) {
  g_threads.store(threads < 1 ? 1 : threads, std::memory_order_relaxed);
}

} // namespace arcmpc
