#include "dhlab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dhlab/kernels.hpp"

namespace dhlab {

namespace {

double default_floor(double s0, std::size_t rows, std::size_t cols) {
    return std::numeric_limits<double>::epsilon() * s0 *
           static_cast<double>(std::max(rows, cols));
}

}  // namespace

SingularSpectrum dense_singular_values(const Eigen::MatrixXd& m) {
    SingularSpectrum sp;
    sp.source = SpectrumSource::dense;
    if (m.size() == 0) return sp;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    sp.values.assign(svd.singularValues().data(),
                     svd.singularValues().data() + svd.singularValues().size());
    std::sort(sp.values.begin(), sp.values.end(), std::greater<double>());
    sp.noise_floor = default_floor(sp.values.empty() ? 0.0 : sp.values.front(),
                                   static_cast<std::size_t>(m.rows()),
                                   static_cast<std::size_t>(m.cols()));
    return sp;
}

SingularSpectrum dense_singular_values(const KernelMatrix& m) {
    return dense_singular_values(m.entries);
}

LinearOperator dense_operator(const Eigen::MatrixXd& m) {
    LinearOperator op;
    op.rows = static_cast<std::size_t>(m.rows());
    op.cols = static_cast<std::size_t>(m.cols());
    // Eigen stores column-major; reuse the kernel-table matvecs
    const double* data = m.data();
    const std::size_t r = op.rows, c = op.cols;
    op.apply = [data, r, c](const double* x, double* y) {
        kern::matvec_colmajor(data, r, c, x, y);
    };
    op.apply_t = [data, r, c](const double* x, double* y) {
        kern::matvec_t_colmajor(data, r, c, x, y);
    };
    return op;
}

LinearOperator fast_hankel_operator(const FastHankel& h) {
    LinearOperator op;
    op.rows = h.rows();
    op.cols = h.cols();
    op.apply = [&h](const double* x, double* y) { h.apply(x, y); };
    op.apply_t = [&h](const double* x, double* y) { h.apply_t(x, y); };
    return op;
}

SingularSpectrum topk_singular_values(const LinearOperator& op, int k, double tol,
                                      std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("topk_singular_values: k must be >= 1");
    if (op.rows == 0 || op.cols == 0)
        throw std::invalid_argument("topk_singular_values: empty operator");
    const std::size_t n = op.cols, nr = op.rows;
    const int max_dim = static_cast<int>(std::min(op.rows, op.cols));
    const int cap = std::min(4 * k + 32, max_dim);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    std::vector<Eigen::VectorXd> us, vs;
    std::vector<double> alphas, betas;
    Eigen::VectorXd v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = unif(rng);
    v.normalize();
    vs.push_back(v);

    Eigen::VectorXd p(nr), r(n), work_small;
    bool exhausted = false;
    double smax_seen = 0.0;

    auto reorth = [](Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& basis) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : basis) w -= q.dot(w) * q;
    };

    std::vector<double> svals;
    std::vector<double> residuals;
    for (int m = 0; m < cap; ++m) {
        op.apply(vs[m].data(), p.data());
        if (m > 0) p -= betas[m - 1] * us[m - 1];
        reorth(p, us);
        const double alpha = p.norm();
        if (alpha <= 1e3 * std::numeric_limits<double>::epsilon() * (smax_seen + 1e-300)) {
            exhausted = true;
            break;
        }
        alphas.push_back(alpha);
        us.push_back(p / alpha);
        smax_seen = std::max(smax_seen, alpha);

        op.apply_t(us[m].data(), r.data());
        r -= alpha * vs[m];
        reorth(r, vs);
        const double beta = r.norm();

        // Ritz values of the upper bidiagonal B (diag alphas, super betas)
        const int dim = m + 1;
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
            b(i, i) = alphas[i];
            if (i + 1 < dim) b(i, i + 1) = betas[i];
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> bs(b, Eigen::ComputeFullU);
        svals.assign(bs.singularValues().data(), bs.singularValues().data() + dim);
        residuals.assign(std::min(k, dim), 0.0);
        bool converged = dim >= k;
        for (int i = 0; i < std::min(k, dim); ++i) {
            residuals[i] = beta * std::abs(bs.matrixU()(dim - 1, i));
            if (residuals[i] > tol * svals[0]) converged = false;
        }
        if (converged && dim >= k) break;
        if (beta <= 1e3 * std::numeric_limits<double>::epsilon() * smax_seen ||
            dim == max_dim) {
            exhausted = true;
            break;
        }
        betas.push_back(beta);
        vs.push_back(r / beta);
    }

    if (!exhausted && static_cast<int>(svals.size()) >= k) {
        bool ok = true;
        for (int i = 0; i < k && i < static_cast<int>(residuals.size()); ++i)
            if (residuals[i] > tol * svals[0]) ok = false;
        if (!ok) {
            std::ostringstream msg;
            msg << "topk_singular_values: no convergence within " << cap
                << " iterations; residuals:";
            for (double res : residuals) msg << " " << res;
            throw std::runtime_error(msg.str());
        }
    }

    SingularSpectrum sp;
    sp.source = SpectrumSource::iterative;
    sp.k = k;
    sp.tol = tol;
    sp.values.assign(static_cast<std::size_t>(k), 0.0);
    for (int i = 0; i < k && i < static_cast<int>(svals.size()); ++i) sp.values[i] = svals[i];
    std::sort(sp.values.begin(), sp.values.end(), std::greater<double>());
    sp.noise_floor = default_floor(sp.values.empty() ? 0.0 : sp.values.front(), op.rows, op.cols);
    return sp;
}

double schatten(const SingularSpectrum& sp, double p) {
    if (std::isnan(p) || p <= 0.0)
        throw std::invalid_argument("schatten: p must lie in (0, inf]");
    if (sp.values.empty()) return 0.0;
    if (std::isinf(p)) return sp.values.front();
    double acc = 0.0;
    for (double s : sp.values)
        if (s > sp.noise_floor) acc += std::pow(s, p);
    return acc > 0.0 ? std::pow(acc, 1.0 / p) : 0.0;
}

double hs_norm_quadrature(const KernelFn& k, const Grid& gx, const Grid& gy) {
    double acc = 0.0;
    for (std::size_t j = 0; j < gy.size(); ++j) {
        const double y = gy.points[j], wy = gy.weights[j];
        for (std::size_t i = 0; i < gx.size(); ++i) {
            const double v = k(gx.points[i], y);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "hs_norm_quadrature: non-finite kernel at (" << gx.points[i]
                    << ", " << y << ")";
                throw std::runtime_error(msg.str());
            }
            acc += v * v * gx.weights[i] * wy;
        }
    }
    return std::sqrt(acc);
}

double trace_pair(const KernelMatrix& a, const KernelMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() ||
        a.row_grid.points != b.row_grid.points || a.col_grid.points != b.col_grid.points)
        throw std::invalid_argument("trace_pair: grids do not match");
    return kern::ops().dot(a.entries.data(), b.entries.data(),
                           static_cast<std::size_t>(a.entries.size()));
}

double schatten4_pow4_via_gram(const Eigen::MatrixXd& m) {
    return kern::gram_frob_sq_colmajor(m.data(), static_cast<std::size_t>(m.rows()),
                                       static_cast<std::size_t>(m.cols()));
}

}  // namespace dhlab
