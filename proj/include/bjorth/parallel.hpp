#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bjorth {

/// Execution mode for the data-parallel kernels. Serial is the reference
/// implementation; OpenMP must produce bit-identical results because every
/// item is a pure function of its index and reductions run in index order.
enum class ExecMode { serial, openmp };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
    return ExecMode::openmp;
#else
    return ExecMode::serial;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs f(i) for i in [0, n). Items must be independent; any output goes
/// through caller-owned per-index storage.
template <typename F>
void parallel_for_index(std::size_t n, ExecMode mode, F&& f) {
#ifdef _OPENMP
    if (mode == ExecMode::openmp) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < nn; ++i) f(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace bjorth
