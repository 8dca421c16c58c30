#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spectrans {

// Serial is the reference path; OpenMP must produce bit-identical results
// because every loop body below is a pure function of its index.
enum class ExecMode { Serial, OpenMP };

// Applies the SPECTRANS_THREADS cap and pins BLAS to one thread so that
// omp-parallel sweeps do not oversubscribe. Call once, early in main().
void init_threading();

int effective_threads(ExecMode mode);

template <class F>
void parallel_for(int n, ExecMode mode, F&& body) {
    if (mode == ExecMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
}

}  // namespace spectrans
