#ifndef DHLAB_OP_HPP
#define DHLAB_OP_HPP

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "dhlab/grid.hpp"
#include "dhlab/symbol.hpp"

namespace dhlab {

using KernelFn = std::function<double(double, double)>;

/// Symmetrized Nystrom matrix of an integral kernel:
///   entries(i,j) = sqrt(w_i) * k(x_i, y_j) * sqrt(w_j).
/// The sqrt(w) k sqrt(w) scaling preserves the singular values of the
/// underlying integral operator and keeps self-adjoint kernels self-adjoint.
/// `kernel` is the unscaled evaluator when the matrix came from one (empty
/// for data matrices); `label` records family and parameters.
struct KernelMatrix {
    Grid row_grid;
    Grid col_grid;
    Eigen::MatrixXd entries;
    std::string label;
    KernelFn kernel;

    Eigen::Index rows() const { return entries.rows(); }
    Eigen::Index cols() const { return entries.cols(); }
};

/// How symbol-generated kernels are sampled on a quadrature cell. `point`
/// evaluates at the node; `cell_mean` replaces the symbol value by its average
/// over the diagonal extent of the cell pair, which removes the aliasing that
/// point sampling suffers on indicator symbols much narrower than a cell.
enum class Sampling { point, cell_mean };

KernelMatrix assemble_from_kernel(const KernelFn& k, const Grid& gx, const Grid& gy,
                                  std::string label = "kernel");

/// Distorted Hankel operator: kernel phi(x^alpha + y^beta). alpha, beta > 0.
KernelMatrix assemble_distorted(const Symbol& phi, double alpha, double beta,
                                const Grid& gx, const Grid& gy,
                                Sampling sampling = Sampling::point);

/// Weighted Hankel operator: kernel x^a y^b phi(x+y). Signs of a, b are
/// unrestricted (negative exponents are needed by the sharpness family).
KernelMatrix assemble_weighted_hankel(const Symbol& phi, double a, double b,
                                      const Grid& gx, const Grid& gy,
                                      Sampling sampling = Sampling::point);

/// k_{alpha,beta}(x,y) = x^(1/(2 alpha)-1/2) y^(1/(2 beta)-1/2) k(x^(1/alpha), y^(1/beta)).
/// alpha, beta nonzero.
KernelFn distort_kernel(const KernelFn& k, double alpha, double beta);

/// Assembles k_{alpha,beta} on the power-transformed grids. By the Jacobian
/// algebra the result equals sqrt(alpha*beta) * m entrywise, so spectra scale
/// by exactly sqrt(alpha*beta). Requires m to carry its kernel evaluator.
KernelMatrix unitary_image(const KernelMatrix& m, double alpha, double beta);

/// Fast Hankel apply on a uniform arithmetic grid of step h:
///   H(i,j) = phi_samples[i+j] * h,  out = H*v,
/// computed in O(L log L) by circulant embedding. phi_samples holds phi at
/// (i+j)*h + 2*offset for all needed index sums; the output has
/// phi_samples.size() - v.size() + 1 entries. Throws on length mismatch.
std::vector<double> hankel_matvec_fast(const std::vector<double>& phi_samples, double h,
                                       const std::vector<double>& v);

/// Cached-spectrum form of the fast Hankel apply for repeated matvecs
/// (iterative SVD, benchmarking). rows + cols - 1 must equal samples.size().
class FastHankel {
public:
    FastHankel(std::vector<double> phi_samples, double h, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    void apply(const double* x, double* y) const;    // y = H x
    void apply_t(const double* x, double* y) const;  // y = H^T x

private:
    void convolve(const double* x, std::size_t nx, double* y, std::size_t ny) const;

    std::size_t rows_, cols_, len_;
    std::vector<std::complex<double>> c_spec_;
};

}  // namespace dhlab

#endif
