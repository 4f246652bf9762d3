#pragma once

#include <cstddef>

namespace gbesov::kernels {

// Batch kernels behind the inner loops (Hermite recurrence sweeps, quadrature
// reductions, variable-exponent modular sums). Scalar reference versions and
// SIMD variants share this signature table; dispatch.cpp picks one at runtime.
struct Ops {
    // H is (max_order+1) x n row-major; fills normalized Hermite values
    // h_k(x[i]) for k = 0..max_order via the three-term recurrence.
    void (*hermite_columns)(double* H, const double* x, std::size_t n, int max_order);

    // y[i] += c * b[i]
    void (*axpy)(double* y, double c, const double* b, std::size_t n);

    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);

    // sum_i w[i] * a[i] * b[i]
    double (*dot3)(const double* w, const double* a, const double* b, std::size_t n);

    // sum_i w[i] * exp(p[i] * (log_abs[i] - log_lambda)); the modular
    // rho(f/lambda) with |f| given through its logarithms.
    double (*modular_sum)(const double* w, const double* log_abs, const double* p,
                          double log_lambda, std::size_t n);

    const char* name;
};

/// Kernel table selected at runtime (CPU capability probe, overridable with
/// the environment variable GBESOV_KERNELS=scalar|avx2|neon).
const Ops& ops();

/// Scalar reference table, always available.
const Ops& scalar_ops();

/// SIMD table for the host ISA, or nullptr when the build or CPU lacks it.
const Ops* simd_ops();

}  // namespace gbesov::kernels
