// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mpnormal::par {

enum class Mode { Serial, OpenMP };

// Runs fn(i) for i in [0, n). The OpenMP path requires fn to be safe to call
// concurrently for distinct i; results must be written to disjoint slots.
template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn, Mode mode = Mode::OpenMP) {
#ifdef _OPENMP
  if (mode == Mode::OpenMP) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace mpnormal::par
