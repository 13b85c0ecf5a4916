// AVX2 + FMA variants of the double kernels.  This translation unit is the
// only one compiled with -mavx2 -mfma; it must not be called unless CPUID
// reports both features (see kernels_dispatch.cpp).
//
// Scalar tails are spelled out here instead of calling the ref:: templates:
// instantiating those templates in this TU would emit AVX-encoded weak
// symbols the linker could hand to the scalar path.

#include <immintrin.h>

#include <cstddef>

#include "legreg/kernels_ref.hpp"

namespace legreg::kernels::avx2 {

namespace {

inline void two_sum(__m256d a, __m256d b, __m256d& s, __m256d& e) {
    s = _mm256_add_pd(a, b);
    __m256d z = _mm256_sub_pd(s, a);
    e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, z)), _mm256_sub_pd(b, z));
}

inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double z = s - a;
    e = (a - (s - z)) + (b - z);
}

}  // namespace

Sum2 dot2(const double* a, const double* b, std::size_t n) {
    // Four independent Dot2 accumulators, one per lane, merged at the end.
    __m256d hi = _mm256_setzero_pd();
    __m256d lo = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d h = _mm256_mul_pd(va, vb);
        __m256d r = _mm256_fmsub_pd(va, vb, h);
        __m256d s, q;
        two_sum(hi, h, s, q);
        hi = s;
        lo = _mm256_add_pd(lo, _mm256_add_pd(q, r));
    }
    alignas(32) double his[4];
    alignas(32) double los[4];
    _mm256_store_pd(his, hi);
    _mm256_store_pd(los, lo);

    Sum2 acc;
    for (int l = 0; l < 4; ++l) {
        double s, q;
        two_sum(acc.hi, his[l], s, q);
        acc.hi = s;
        acc.lo += q + los[l];
    }
    for (; i < n; ++i) {
        double s, q;
        double h = a[i] * b[i];
        double r = _mm_cvtsd_f64(_mm_fmsub_sd(_mm_set_sd(a[i]), _mm_set_sd(b[i]), _mm_set_sd(h)));
        two_sum(acc.hi, h, s, q);
        acc.hi = s;
        acc.lo += q + r;
    }
    return acc;
}

void legendre_next(int k, const double* x, const double* p, const double* q, double* out,
                   std::size_t n) {
    const __m256d c1 = _mm256_set1_pd(2.0 * k + 1.0);
    const __m256d c2 = _mm256_set1_pd(static_cast<double>(k));
    const __m256d c3 = _mm256_set1_pd(k + 1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vp = _mm256_loadu_pd(p + i);
        __m256d vq = _mm256_loadu_pd(q + i);
        __m256d t = _mm256_mul_pd(_mm256_mul_pd(c1, vx), vp);
        t = _mm256_sub_pd(t, _mm256_mul_pd(c2, vq));
        _mm256_storeu_pd(out + i, _mm256_div_pd(t, c3));
    }
    const double s1 = 2.0 * k + 1.0;
    const double s2 = k;
    const double s3 = k + 1.0;
    for (; i < n; ++i) {
        out[i] = ((s1 * x[i]) * p[i] - s2 * q[i]) / s3;
    }
}

void three_term(double alpha, double beta, const double* x, const double* p,
                const double* q, double* out, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    const __m256d vb = _mm256_set1_pd(beta);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), va);
        __m256d t = _mm256_mul_pd(d, _mm256_loadu_pd(p + i));
        t = _mm256_sub_pd(t, _mm256_mul_pd(vb, _mm256_loadu_pd(q + i)));
        _mm256_storeu_pd(out + i, t);
    }
    for (; i < n; ++i) {
        out[i] = (x[i] - alpha) * p[i] - beta * q[i];
    }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_add_pd(vy, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

}  // namespace legreg::kernels::avx2
