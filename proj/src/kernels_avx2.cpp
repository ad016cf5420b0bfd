// AVX2+FMA variants of the inner-loop kernels. This translation unit is the
// only one compiled with -mavx2 -mfma; it must not be entered unless the CPU
// reports both features (the dispatcher checks before handing out the table).

#include "dhlab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace dhlab::kern {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double nrm2sq_avx2(const double* x, std::size_t n) { return dot_avx2(x, x, n); }

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(double* x, double alpha, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= alpha;
}

void mul3_avx2(double* out, double s, const double* a, const double* b, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, v));
    }
    for (; i < n; ++i) out[i] = s * a[i] * b[i];
}

void cmul_avx2(double* out, const double* a, const double* b, std::size_t n) {
    // two complex values per 256-bit lane group
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d va = _mm256_loadu_pd(a + 2 * i);   // [ar0 ai0 ar1 ai1]
        __m256d vb = _mm256_loadu_pd(b + 2 * i);
        __m256d br = _mm256_movedup_pd(vb);                  // [br0 br0 br1 br1]
        __m256d bi = _mm256_permute_pd(vb, 0b1111);          // [bi0 bi0 bi1 bi1]
        __m256d sw = _mm256_permute_pd(va, 0b0101);          // [ai0 ar0 ai1 ar1]
        __m256d t = _mm256_mul_pd(sw, bi);                   // [ai*bi ar*bi ...]
        _mm256_storeu_pd(out + 2 * i, _mm256_fmaddsub_pd(va, br, t));
    }
    for (; i < n; ++i) {
        const double ar = a[2 * i], ai = a[2 * i + 1];
        const double br = b[2 * i], bi = b[2 * i + 1];
        out[2 * i] = ar * br - ai * bi;
        out[2 * i + 1] = ar * bi + ai * br;
    }
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops t{dot_avx2, nrm2sq_avx2, axpy_avx2,
                       scale_avx2, mul3_avx2, cmul_avx2};
    return &t;
}

}  // namespace dhlab::kern

#else

namespace dhlab::kern {
const Ops* avx2_ops() { return nullptr; }
}  // namespace dhlab::kern

#endif
