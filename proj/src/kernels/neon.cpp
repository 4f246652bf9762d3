// NEON (AArch64) kernel variants; mirrors avx2.cpp on 2-lane float64x2_t.
// NEON is baseline on aarch64, so this TU needs no extra compile flags.

#include <arm_neon.h>
#include <cmath>

#include "gbesov/kernels.hpp"

namespace gbesov::kernels {
namespace {

inline float64x2_t exp2lanes(float64x2_t x) {
    const float64x2_t log2e = vdupq_n_f64(1.4426950408889634073599);
    const float64x2_t c1 = vdupq_n_f64(6.93145751953125e-1);
    const float64x2_t c2 = vdupq_n_f64(1.42860682030941723212e-6);
    const float64x2_t lo = vdupq_n_f64(-708.396418532264);
    const float64x2_t hi = vdupq_n_f64(709.782712893384);
    const uint64x2_t under = vcltq_f64(x, lo);
    const uint64x2_t over = vcgtq_f64(x, hi);
    float64x2_t xc = vminq_f64(vmaxq_f64(x, lo), hi);

    float64x2_t pn = vrndnq_f64(vmulq_f64(log2e, xc));
    xc = vfmsq_f64(xc, pn, c1);
    xc = vfmsq_f64(xc, pn, c2);

    const float64x2_t xx = vmulq_f64(xc, xc);
    float64x2_t px = vfmaq_f64(vdupq_n_f64(3.02994407707441961300e-2),
                               vdupq_n_f64(1.26177193074810590878e-4), xx);
    px = vfmaq_f64(vdupq_n_f64(9.99999999999999999910e-1), px, xx);
    px = vmulq_f64(px, xc);
    float64x2_t qx = vfmaq_f64(vdupq_n_f64(2.52448340349684104192e-3),
                               vdupq_n_f64(3.00198505138664455042e-6), xx);
    qx = vfmaq_f64(vdupq_n_f64(2.27265548208155028766e-1), qx, xx);
    qx = vfmaq_f64(vdupq_n_f64(2.00000000000000000005e0), qx, xx);
    const float64x2_t e = vdivq_f64(px, vsubq_f64(qx, px));
    float64x2_t r = vfmaq_f64(vdupq_n_f64(1.0), vdupq_n_f64(2.0), e);

    // two-step 2^n scaling keeps n = 1024 representable
    const int64x2_t n64 = vcvtq_s64_f64(pn);
    const int64x2_t h64 = vshrq_n_s64(n64, 1);
    const int64x2_t r64 = vsubq_s64(n64, h64);
    const int64x2_t hbits = vshlq_n_s64(vaddq_s64(h64, vdupq_n_s64(1023)), 52);
    const int64x2_t rbits = vshlq_n_s64(vaddq_s64(r64, vdupq_n_s64(1023)), 52);
    r = vmulq_f64(vmulq_f64(r, vreinterpretq_f64_s64(hbits)), vreinterpretq_f64_s64(rbits));

    r = vbslq_f64(under, vdupq_n_f64(0.0), r);
    r = vbslq_f64(over, vdupq_n_f64(HUGE_VAL), r);
    return r;
}

void hermite_columns_neon(double* H, const double* x, std::size_t n, int max_order) {
    for (std::size_t i = 0; i < n; ++i) H[i] = 1.0;
    if (max_order == 0) return;
    const double s2 = std::sqrt(2.0);
    double* h1 = H + n;
    {
        const float64x2_t vs2 = vdupq_n_f64(s2);
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2) vst1q_f64(h1 + i, vmulq_f64(vs2, vld1q_f64(x + i)));
        for (; i < n; ++i) h1[i] = s2 * x[i];
    }
    for (int k = 1; k < max_order; ++k) {
        const double c1 = std::sqrt(2.0 / (k + 1));
        const double c2 = std::sqrt(k / (k + 1.0));
        const double* hm = H + static_cast<std::size_t>(k - 1) * n;
        const double* hk = H + static_cast<std::size_t>(k) * n;
        double* hn = H + static_cast<std::size_t>(k + 1) * n;
        const float64x2_t v1 = vdupq_n_f64(c1);
        const float64x2_t v2 = vdupq_n_f64(c2);
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2) {
            const float64x2_t a =
                vmulq_f64(vmulq_f64(v1, vld1q_f64(x + i)), vld1q_f64(hk + i));
            const float64x2_t b = vmulq_f64(v2, vld1q_f64(hm + i));
            vst1q_f64(hn + i, vsubq_f64(a, b));
        }
        for (; i < n; ++i) hn[i] = c1 * x[i] * hk[i] - c2 * hm[i];
    }
}

void axpy_neon(double* y, double c, const double* b, std::size_t n) {
    const float64x2_t vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(vc, vld1q_f64(b + i))));
    for (; i < n; ++i) y[i] = y[i] + c * b[i];
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_neon(const double* w, const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t ab = vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vfmaq_f64(acc, vld1q_f64(w + i), ab);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * a[i] * b[i];
    return s;
}

double modular_sum_neon(const double* w, const double* log_abs, const double* p,
                        double log_lambda, std::size_t n) {
    const float64x2_t vl = vdupq_n_f64(log_lambda);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t arg =
            vmulq_f64(vld1q_f64(p + i), vsubq_f64(vld1q_f64(log_abs + i), vl));
        acc = vfmaq_f64(acc, vld1q_f64(w + i), exp2lanes(arg));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * std::exp(p[i] * (log_abs[i] - log_lambda));
    return s;
}

}  // namespace

const Ops& neon_ops() {
    static const Ops table{hermite_columns_neon, axpy_neon, dot_neon,
                           dot3_neon, modular_sum_neon, "neon"};
    return table;
}

}  // namespace gbesov::kernels
