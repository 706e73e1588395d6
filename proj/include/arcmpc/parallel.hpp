#pragma once

// OpenMP-backed batch evaluation with a serial path kept as the reference
// implementation. Both paths fill per-index output slots, so results are
// bit-identical regardless of thread count and the reduction stays with the
// caller.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcmpc {

// Process-wide worker count. 1 selects the serial reference path.
int parallel_threads();
void set_parallel_threads(int threads);

template <typename F>
void parallel_for(std::size_t n, F&& body) {
  const int threads = parallel_threads();
#ifdef _OPENMP
  if (threads > 1 && n > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

// Serial reference path, bypassing the thread setting.
template <typename F>
void serial_for(std::size_t n, F&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace arcmpc
