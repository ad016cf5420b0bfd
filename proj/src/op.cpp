#include "dhlab/op.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dhlab/fft.hpp"
#include "dhlab/kernels.hpp"

namespace dhlab {

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t v = 1;
    while (v < n) v <<= 1;
    return v;
}

void check_entry_finite(double v, std::size_t i, std::size_t j, double arg,
                        const char* what) {
    if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << ": non-finite value at entry (" << i << ", " << j
            << "), argument " << arg;
        throw std::runtime_error(msg.str());
    }
}

std::vector<double> sqrt_weights(const Grid& g) {
    std::vector<double> s(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) s[i] = std::sqrt(g.weights[i]);
    return s;
}

}  // namespace

KernelMatrix assemble_from_kernel(const KernelFn& k, const Grid& gx, const Grid& gy,
                                  std::string label) {
    KernelMatrix m;
    m.row_grid = gx;
    m.col_grid = gy;
    m.label = std::move(label);
    m.kernel = k;
    m.entries.resize(static_cast<Eigen::Index>(gx.size()), static_cast<Eigen::Index>(gy.size()));
    const std::vector<double> sx = sqrt_weights(gx);
    const std::vector<double> sy = sqrt_weights(gy);
    for (std::size_t j = 0; j < gy.size(); ++j) {
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double v = k(gx.points[i], gy.points[j]);
            check_entry_finite(v, i, j, gx.points[i], "assemble_from_kernel");
            m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                sx[i] * v * sy[j];
        }
    }
    return m;
}

KernelMatrix assemble_distorted(const Symbol& phi, double alpha, double beta,
                                const Grid& gx, const Grid& gy, Sampling sampling) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("assemble_distorted: alpha, beta must be > 0");
    KernelMatrix m;
    m.row_grid = gx;
    m.col_grid = gy;
    {
        std::ostringstream lbl;
        lbl << "G[" << alpha << "," << beta << "]{" << phi.label << "}";
        if (sampling == Sampling::cell_mean) lbl << "(cell-mean)";
        m.label = lbl.str();
    }
    auto ev = phi.eval;
    m.kernel = [ev, alpha, beta](double x, double y) {
        return ev(std::pow(x, alpha) + std::pow(y, beta));
    };
    m.entries.resize(static_cast<Eigen::Index>(gx.size()), static_cast<Eigen::Index>(gy.size()));
    const std::vector<double> sx = sqrt_weights(gx);
    const std::vector<double> sy = sqrt_weights(gy);

    std::vector<double> xa(gx.size());
    for (std::size_t i = 0; i < gx.size(); ++i) xa[i] = std::pow(gx.points[i], alpha);
    std::vector<double> yb(gy.size());
    for (std::size_t j = 0; j < gy.size(); ++j) yb[j] = std::pow(gy.points[j], beta);

    if (sampling == Sampling::point) {
        for (std::size_t j = 0; j < gy.size(); ++j) {
            for (std::size_t i = 0; i < gx.size(); ++i) {
                const double arg = xa[i] + yb[j];
                const double v = phi(arg);
                check_entry_finite(v, i, j, arg, "assemble_distorted");
                m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    sx[i] * v * sy[j];
            }
        }
        return m;
    }

    const std::vector<double> bx = cell_bounds(gx);
    const std::vector<double> by = cell_bounds(gy);
    for (std::size_t j = 0; j < gy.size(); ++j) {
        const double ylo = std::pow(by[j], beta), yhi = std::pow(by[j + 1], beta);
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double lo = std::pow(bx[i], alpha) + ylo;
            const double hi = std::pow(bx[i + 1], alpha) + yhi;
            const double v = phi.mean(lo, hi);
            check_entry_finite(v, i, j, xa[i] + yb[j], "assemble_distorted");
            m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                sx[i] * v * sy[j];
        }
    }
    return m;
}

KernelMatrix assemble_weighted_hankel(const Symbol& phi, double a, double b,
                                      const Grid& gx, const Grid& gy, Sampling sampling) {
    KernelMatrix m;
    m.row_grid = gx;
    m.col_grid = gy;
    {
        std::ostringstream lbl;
        lbl << "Gamma[" << a << "," << b << "]{" << phi.label << "}";
        if (sampling == Sampling::cell_mean) lbl << "(cell-mean)";
        m.label = lbl.str();
    }
    auto ev = phi.eval;
    m.kernel = [ev, a, b](double x, double y) {
        return std::pow(x, a) * std::pow(y, b) * ev(x + y);
    };
    m.entries.resize(static_cast<Eigen::Index>(gx.size()), static_cast<Eigen::Index>(gy.size()));
    const std::vector<double> sx = sqrt_weights(gx);
    const std::vector<double> sy = sqrt_weights(gy);

    std::vector<double> xw(gx.size());
    for (std::size_t i = 0; i < gx.size(); ++i) xw[i] = std::pow(gx.points[i], a) * sx[i];
    std::vector<double> yw(gy.size());
    for (std::size_t j = 0; j < gy.size(); ++j) yw[j] = std::pow(gy.points[j], b) * sy[j];

    if (sampling == Sampling::point) {
        for (std::size_t j = 0; j < gy.size(); ++j) {
            for (std::size_t i = 0; i < gx.size(); ++i) {
                const double arg = gx.points[i] + gy.points[j];
                const double v = phi(arg);
                const double e = xw[i] * v * yw[j];
                check_entry_finite(e, i, j, arg, "assemble_weighted_hankel");
                m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = e;
            }
        }
        return m;
    }

    const std::vector<double> bx = cell_bounds(gx);
    const std::vector<double> by = cell_bounds(gy);
    for (std::size_t j = 0; j < gy.size(); ++j) {
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double v = phi.mean(bx[i] + by[j], bx[i + 1] + by[j + 1]);
            const double e = xw[i] * v * yw[j];
            check_entry_finite(e, i, j, gx.points[i] + gy.points[j],
                               "assemble_weighted_hankel");
            m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = e;
        }
    }
    return m;
}

KernelFn distort_kernel(const KernelFn& k, double alpha, double beta) {
    if (alpha == 0.0 || beta == 0.0)
        throw std::invalid_argument("distort_kernel: alpha, beta must be nonzero");
    const double ea = 0.5 / alpha - 0.5;
    const double eb = 0.5 / beta - 0.5;
    const double ia = 1.0 / alpha;
    const double ib = 1.0 / beta;
    return [k, ea, eb, ia, ib](double x, double y) {
        return std::pow(x, ea) * std::pow(y, eb) * k(std::pow(x, ia), std::pow(y, ib));
    };
}

KernelMatrix unitary_image(const KernelMatrix& m, double alpha, double beta) {
    if (!m.kernel)
        throw std::invalid_argument("unitary_image: matrix does not carry a kernel evaluator");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("unitary_image: alpha, beta must be > 0");
    KernelMatrix out = assemble_from_kernel(distort_kernel(m.kernel, alpha, beta),
                                            power_transform(m.row_grid, alpha),
                                            power_transform(m.col_grid, beta),
                                            m.label + " ~U(" + std::to_string(alpha) + "," +
                                                std::to_string(beta) + ")");
    return out;
}

std::vector<double> hankel_matvec_fast(const std::vector<double>& phi_samples, double h,
                                       const std::vector<double>& v) {
    if (v.empty() || phi_samples.size() < v.size())
        throw std::invalid_argument("hankel_matvec_fast: need phi samples for all index sums");
    FastHankel op(phi_samples, h, phi_samples.size() - v.size() + 1, v.size());
    std::vector<double> out(op.rows());
    op.apply(v.data(), out.data());
    return out;
}

FastHankel::FastHankel(std::vector<double> phi_samples, double h, std::size_t rows,
                       std::size_t cols)
    : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0 || phi_samples.size() != rows + cols - 1)
        throw std::invalid_argument("FastHankel: samples length must be rows+cols-1");
    len_ = next_pow2(2 * phi_samples.size());
    std::vector<double> c(len_, 0.0);
    for (std::size_t i = 0; i < phi_samples.size(); ++i) c[i] = phi_samples[i] * h;
    c_spec_ = rfft(c);
}

void FastHankel::convolve(const double* x, std::size_t nx, double* y, std::size_t ny) const {
    // y[i] = sum_j c[i+j] x[j] = (c * rev x)[i + nx - 1]
    std::vector<double> buf(len_, 0.0);
    for (std::size_t j = 0; j < nx; ++j) buf[nx - 1 - j] = x[j];
    std::vector<std::complex<double>> spec = rfft(buf);
    kern::ops().cmul(reinterpret_cast<double*>(spec.data()),
                     reinterpret_cast<const double*>(spec.data()),
                     reinterpret_cast<const double*>(c_spec_.data()), spec.size());
    const std::vector<double> w = irfft(spec, len_);
    for (std::size_t i = 0; i < ny; ++i) y[i] = w[i + nx - 1];
}

void FastHankel::apply(const double* x, double* y) const { convolve(x, cols_, y, rows_); }

void FastHankel::apply_t(const double* x, double* y) const { convolve(x, rows_, y, cols_); }

}  // namespace dhlab
