#ifndef DHLAB_KERNELS_HPP
#define DHLAB_KERNELS_HPP

#include <cstddef>

// Data-parallel inner loops used by assembly, matvecs and Gram sums.
// Every operation has a scalar reference implementation and, on x86-64
// hardware with AVX2+FMA, a vectorized variant selected once at startup.
// Set DHLAB_SIMD=scalar|avx2|auto to override the runtime choice.

namespace dhlab::kern {

enum class Isa { scalar, avx2 };

struct Ops {
    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i x[i]^2
    double (*nrm2sq)(const double* x, std::size_t n);
    // y[i] += alpha*x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // x[i] *= alpha
    void (*scale)(double* x, double alpha, std::size_t n);
    // out[i] = s*a[i]*b[i]
    void (*mul3)(double* out, double s, const double* a, const double* b, std::size_t n);
    // interleaved complex: out[i] = a[i]*b[i], arrays of n complex values (2n doubles)
    void (*cmul)(double* out, const double* a, const double* b, std::size_t n);
};

// Table of kernels for the active ISA (selected on first call).
const Ops& ops();

Isa active_isa();
const char* isa_name(Isa);

// Reference (scalar) and AVX2 tables, exposed for equivalence tests.
const Ops& scalar_ops();
const Ops* avx2_ops();  // nullptr when unsupported by CPU or build

// Column-major dense helpers built on the kernel table.
// y = A*x      (A is rows x cols, column-major, leading dimension = rows)
void matvec_colmajor(const double* a, std::size_t rows, std::size_t cols,
                     const double* x, double* y);
// y = A^T*x
void matvec_t_colmajor(const double* a, std::size_t rows, std::size_t cols,
                       const double* x, double* y);
// ||A^T A||_F^2 = sum_{j,k} (col_j . col_k)^2
double gram_frob_sq_colmajor(const double* a, std::size_t rows, std::size_t cols);

}  // namespace dhlab::kern

#endif
