#ifndef DHLAB_SPECTRUM_HPP
#define DHLAB_SPECTRUM_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "dhlab/grid.hpp"
#include "dhlab/op.hpp"

namespace dhlab {

enum class SpectrumSource { dense, iterative };

/// Nonincreasing singular values with the noise floor below which entries are
/// excluded from Schatten sums (default eps * s_0 * max dimension; SVD
/// rounding noise would otherwise dominate quasinorm sums for p < 1).
struct SingularSpectrum {
    std::vector<double> values;
    SpectrumSource source = SpectrumSource::dense;
    int k = 0;          // requested count (iterative only)
    double tol = 0.0;   // requested tolerance (iterative only)
    double noise_floor = 0.0;
};

SingularSpectrum dense_singular_values(const Eigen::MatrixXd& m);
SingularSpectrum dense_singular_values(const KernelMatrix& m);

/// Operator-apply pair for the iterative path.
struct LinearOperator {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::function<void(const double*, double*)> apply;    // y = A x
    std::function<void(const double*, double*)> apply_t;  // y = A^T x
};

LinearOperator dense_operator(const Eigen::MatrixXd& m);
LinearOperator fast_hankel_operator(const FastHankel& h);

/// Top k singular values by Golub-Kahan-Lanczos bidiagonalization with full
/// reorthogonalization (correctness over speed at desk scale). Iteration cap
/// 4k + 32; throws with the achieved residuals if that is not enough.
SingularSpectrum topk_singular_values(const LinearOperator& op, int k, double tol,
                                      std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Schatten p-(quasi)norm: (sum_{s_j > noise_floor} s_j^p)^(1/p); s_0 for
/// p = inf. p in (0, inf].
double schatten(const SingularSpectrum& sp, double p);

/// (sum_{ij} |k(x_i,y_j)|^2 w_i w_j)^(1/2) — the Hilbert-Schmidt norm by
/// direct quadrature, identical as a finite sum to the Frobenius norm of the
/// symmetrized Nystrom matrix of k.
double hs_norm_quadrature(const KernelFn& k, const Grid& gx, const Grid& gy);

/// Frobenius pairing sum_ij A_ij B_ij on matching grids (kernels here are
/// real valued, so the conjugate is trivial); equals the kernel double
/// integral under the symmetrized scaling.
double trace_pair(const KernelMatrix& a, const KernelMatrix& b);

/// sum_j s_j^4 = ||A^T A||_F^2 without an SVD; fourth-power Schatten sums of
/// large strip operators reduce to a Gram Frobenius norm.
double schatten4_pow4_via_gram(const Eigen::MatrixXd& m);

}  // namespace dhlab

#endif
