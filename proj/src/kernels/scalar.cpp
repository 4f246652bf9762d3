#include <cmath>

#include "gbesov/kernels.hpp"

namespace gbesov::kernels {
namespace {

void hermite_columns_scalar(double* H, const double* x, std::size_t n, int max_order) {
    for (std::size_t i = 0; i < n; ++i) H[i] = 1.0;
    if (max_order == 0) return;
    const double s2 = std::sqrt(2.0);
    double* h1 = H + n;
    for (std::size_t i = 0; i < n; ++i) h1[i] = s2 * x[i];
    for (int k = 1; k < max_order; ++k) {
        const double c1 = std::sqrt(2.0 / (k + 1));
        const double c2 = std::sqrt(k / (k + 1.0));
        const double* hm = H + static_cast<std::size_t>(k - 1) * n;
        const double* hk = H + static_cast<std::size_t>(k) * n;
        double* hn = H + static_cast<std::size_t>(k + 1) * n;
        for (std::size_t i = 0; i < n; ++i) hn[i] = c1 * x[i] * hk[i] - c2 * hm[i];
    }
}

void axpy_scalar(double* y, double c, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + c * b[i];
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_scalar(const double* w, const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
    return s;
}

double modular_sum_scalar(const double* w, const double* log_abs, const double* p,
                          double log_lambda, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = log_abs[i] - log_lambda;  // -inf for zero samples
        s += w[i] * std::exp(p[i] * t);
    }
    return s;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops table{hermite_columns_scalar, axpy_scalar, dot_scalar,
                           dot3_scalar, modular_sum_scalar, "scalar"};
    return table;
}

}  // namespace gbesov::kernels
