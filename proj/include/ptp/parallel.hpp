#pragma once

namespace ptp {

// Runs f(i) for i in [0, n). Iterations must be independent. Uses OpenMP
// threads when compiled in and requested; the serial path is the reference.
template <typename F>
void parallel_for(int n, bool parallel, F&& f) {
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)parallel;
#endif
  for (int i = 0; i < n; ++i) f(i);
}

}  // namespace ptp
