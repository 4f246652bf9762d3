// AVX2 + FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; it must not be entered unless dispatch.cpp has verified
// the CPU supports both.

#include <cmath>
#include <immintrin.h>

#include "gbesov/kernels.hpp"

namespace gbesov::kernels {
namespace {

// Cephes-style exp on 4 lanes, ~1 ulp. Arguments below the IEEE underflow
// threshold flush to exact 0 so that zero samples (log|f| = -inf) drop out.
inline __m256d exp4(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);

    const __m256d lo = _mm256_set1_pd(-708.396418532264);
    const __m256d hi = _mm256_set1_pd(709.782712893384);
    const __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    const __m256d over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    __m256d pn = _mm256_round_pd(_mm256_mul_pd(log2e, xc),
                                 _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    xc = _mm256_fnmadd_pd(pn, c1, xc);
    xc = _mm256_fnmadd_pd(pn, c2, xc);

    const __m256d xx = _mm256_mul_pd(xc, xc);
    __m256d px = _mm256_fmadd_pd(p0, xx, p1);
    px = _mm256_fmadd_pd(px, xx, p2);
    px = _mm256_mul_pd(px, xc);
    __m256d qx = _mm256_fmadd_pd(q0, xx, q1);
    qx = _mm256_fmadd_pd(qx, xx, q2);
    qx = _mm256_fmadd_pd(qx, xx, q3);
    const __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    __m256d r = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // scale by 2^n in two steps so n = 1024 (arguments just under the
    // overflow threshold) stays representable
    const __m128i n32 = _mm256_cvtpd_epi32(pn);
    const __m128i h32 = _mm_srai_epi32(n32, 1);
    const __m128i r32 = _mm_sub_epi32(n32, h32);
    const __m256i h64 = _mm256_slli_epi64(
        _mm256_add_epi64(_mm256_cvtepi32_epi64(h32), _mm256_set1_epi64x(1023)), 52);
    const __m256i r64 = _mm256_slli_epi64(
        _mm256_add_epi64(_mm256_cvtepi32_epi64(r32), _mm256_set1_epi64x(1023)), 52);
    r = _mm256_mul_pd(_mm256_mul_pd(r, _mm256_castsi256_pd(h64)), _mm256_castsi256_pd(r64));

    r = _mm256_blendv_pd(r, _mm256_setzero_pd(), under);
    r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), over);
    return r;
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// mul/add only (no FMA): lanes reproduce the scalar reference bit for bit.
void hermite_columns_avx2(double* H, const double* x, std::size_t n, int max_order) {
    for (std::size_t i = 0; i < n; ++i) H[i] = 1.0;
    if (max_order == 0) return;
    const double s2 = std::sqrt(2.0);
    double* h1 = H + n;
    {
        const __m256d vs2 = _mm256_set1_pd(s2);
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
            _mm256_storeu_pd(h1 + i, _mm256_mul_pd(vs2, _mm256_loadu_pd(x + i)));
        for (; i < n; ++i) h1[i] = s2 * x[i];
    }
    for (int k = 1; k < max_order; ++k) {
        const double c1 = std::sqrt(2.0 / (k + 1));
        const double c2 = std::sqrt(k / (k + 1.0));
        const double* hm = H + static_cast<std::size_t>(k - 1) * n;
        const double* hk = H + static_cast<std::size_t>(k) * n;
        double* hn = H + static_cast<std::size_t>(k + 1) * n;
        const __m256d v1 = _mm256_set1_pd(c1);
        const __m256d v2 = _mm256_set1_pd(c2);
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            const __m256d a = _mm256_mul_pd(_mm256_mul_pd(v1, _mm256_loadu_pd(x + i)),
                                            _mm256_loadu_pd(hk + i));
            const __m256d b = _mm256_mul_pd(v2, _mm256_loadu_pd(hm + i));
            _mm256_storeu_pd(hn + i, _mm256_sub_pd(a, b));
        }
        for (; i < n; ++i) hn[i] = c1 * x[i] * hk[i] - c2 * hm[i];
    }
}

void axpy_avx2(double* y, double c, const double* b, std::size_t n) {
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_add_pd(_mm256_loadu_pd(y + i),
                                        _mm256_mul_pd(vc, _mm256_loadu_pd(b + i)));
        _mm256_storeu_pd(y + i, t);
    }
    for (; i < n; ++i) y[i] = y[i] + c * b[i];
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_avx2(const double* w, const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), ab, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * a[i] * b[i];
    return s;
}

double modular_sum_avx2(const double* w, const double* log_abs, const double* p,
                        double log_lambda, std::size_t n) {
    const __m256d vl = _mm256_set1_pd(log_lambda);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d arg = _mm256_mul_pd(_mm256_loadu_pd(p + i),
                                          _mm256_sub_pd(_mm256_loadu_pd(log_abs + i), vl));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), exp4(arg), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * std::exp(p[i] * (log_abs[i] - log_lambda));
    return s;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops table{hermite_columns_avx2, axpy_avx2, dot_avx2,
                           dot3_avx2, modular_sum_avx2, "avx2"};
    return table;
}

}  // namespace gbesov::kernels
