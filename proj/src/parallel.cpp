#include "spectrans/parallel.hpp"

#include <cstdlib>
#include <string>

namespace spectrans {

void init_threading() {
    // LAPACK/BLAS calls happen inside omp loops; keep them single-threaded
    // unless the user explicitly asked otherwise.
    setenv("OPENBLAS_NUM_THREADS", "1", /*overwrite=*/0);
    setenv("OMP_NESTED", "false", 0);
#ifdef _OPENMP
    if (const char* cap = std::getenv("SPECTRANS_THREADS")) {
        int n = std::atoi(cap);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

int effective_threads(ExecMode mode) {
    if (mode == ExecMode::Serial) return 1;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace spectrans
