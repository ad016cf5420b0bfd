#include "dhlab/kernels.hpp"

namespace dhlab::kern {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) s0 += a[i] * b[i];
    return (s0 + s1) + (s2 + s3);
}

double nrm2sq_scalar(const double* x, std::size_t n) { return dot_scalar(x, x, n); }

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void mul3_scalar(double* out, double s, const double* a, const double* b, std::size_t n) {
    // same association as the vector path: s * (a*b)
    for (std::size_t i = 0; i < n; ++i) out[i] = s * (a[i] * b[i]);
}

void cmul_scalar(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[2 * i], ai = a[2 * i + 1];
        const double br = b[2 * i], bi = b[2 * i + 1];
        out[2 * i] = ar * br - ai * bi;
        out[2 * i + 1] = ar * bi + ai * br;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops t{dot_scalar, nrm2sq_scalar, axpy_scalar,
                       scale_scalar, mul3_scalar, cmul_scalar};
    return t;
}

}  // namespace dhlab::kern
