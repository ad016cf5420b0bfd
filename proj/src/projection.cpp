#include "dhlab/projection.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dhlab {

double JacobiRule::weight_sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

JacobiRule gauss_jacobi01(int n, double exp_u, double exp_1mu) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi01: node count must be >= 1");
    if (!(exp_u > -1.0) || !(exp_1mu > -1.0))
        throw std::invalid_argument("gauss_jacobi01: exponents must exceed -1");
    // weight (1-z)^A (1+z)^B on [-1,1] with A = exp_1mu, B = exp_u, then
    // mapped by u = (1+z)/2
    const double A = exp_1mu, B = exp_u;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    jac(0, 0) = (B - A) / (A + B + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + A + B;
        jac(k, k) = (B * B - A * A) / (t * (t + 2.0));
        // b_1 in the reduced form to dodge the 0/0 at A+B = -1
        const double bk =
            (k == 1) ? 4.0 * (1.0 + A) * (1.0 + B) / ((A + B + 2.0) * (A + B + 2.0) * (A + B + 3.0))
                     : 4.0 * k * (k + A) * (k + B) * (k + A + B) /
                           (t * t * (t + 1.0) * (t - 1.0));
        const double e = std::sqrt(bk);
        jac(k - 1, k) = e;
        jac(k, k - 1) = e;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi01: eigen decomposition failed");
    const double mu0 =
        std::exp((A + B + 1.0) * std::log(2.0) + std::lgamma(A + 1.0) + std::lgamma(B + 1.0) -
                 std::lgamma(A + B + 2.0));
    const double scale = std::exp2(-(A + B + 1.0));  // [-1,1] -> [0,1] weight change
    JacobiRule rule;
    rule.exp_u = exp_u;
    rule.exp_1mu = exp_1mu;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()[i]);
        const double q = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * q * q * scale;
    }
    return rule;
}

JacobiRule angular_rule(double alpha, double beta, int n) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("angular_rule: alpha, beta must be > 0");
    return gauss_jacobi01(n, 1.0 / beta - 1.0, 1.0 / alpha - 1.0);
}

double beta_normalizer(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("beta_normalizer: alpha, beta must be > 0");
    const double ia = 1.0 / alpha, ib = 1.0 / beta;
    return 0.5 * std::exp(std::lgamma(ia) + std::lgamma(ib) - std::lgamma(ia + ib));
}

namespace {

// level-curve point for radius r and angular node u
inline void level_point(double r, double u, double inv_alpha, double inv_beta, double& x,
                        double& y) {
    x = std::pow(r * (1.0 - u), inv_alpha);
    y = std::pow(r * u, inv_beta);
}

}  // namespace

Symbol project_Q(const KernelFn& k, double alpha, double beta, const JacobiRule& rule) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("project_Q: alpha, beta must be > 0");
    const double ia = 1.0 / alpha, ib = 1.0 / beta;
    const double wsum = rule.weight_sum();
    auto nodes = rule.nodes;
    auto weights = rule.weights;
    Symbol s;
    s.label = "Q-projected kernel";
    s.eval = [k, nodes, weights, wsum, ia, ib](double r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            double x, y;
            level_point(r, nodes[i], ia, ib, x, y);
            const double v = k(x, y);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "project_Q: kernel evaluation failed on level curve r = " << r
                    << " at angular node u = " << nodes[i];
                throw std::runtime_error(msg.str());
            }
            acc += weights[i] * v;
        }
        return acc / wsum;
    };
    return s;
}

namespace {

struct LevelBins {
    double log2_rmin = 0.0;
    double bpo = 0.0;
    int count = 0;

    int index(double r) const {
        const int b = static_cast<int>(std::floor((std::log2(r) - log2_rmin) * bpo));
        return std::clamp(b, 0, count - 1);
    }
};

}  // namespace

KernelMatrix project_q_matrix(const KernelMatrix& m, double alpha, double beta,
                              int bins_per_octave) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("project_q_matrix: alpha, beta must be > 0");
    if (bins_per_octave < 1)
        throw std::invalid_argument("project_q_matrix: bins_per_octave must be >= 1");
    const std::size_t nr = m.row_grid.size(), nc = m.col_grid.size();
    if (nr == 0 || nc == 0) throw std::invalid_argument("project_q_matrix: degenerate grids");

    std::vector<double> xa(nr), yb(nc), swx(nr), swy(nc);
    for (std::size_t i = 0; i < nr; ++i) {
        xa[i] = std::pow(m.row_grid.points[i], alpha);
        swx[i] = std::sqrt(m.row_grid.weights[i]);
    }
    for (std::size_t j = 0; j < nc; ++j) {
        yb[j] = std::pow(m.col_grid.points[j], beta);
        swy[j] = std::sqrt(m.col_grid.weights[j]);
    }
    const double rmin = xa.front() + yb.front();
    const double rmax = xa.back() + yb.back();

    LevelBins bins;
    bins.log2_rmin = std::log2(rmin);
    bins.bpo = bins_per_octave;
    bins.count =
        static_cast<int>(std::floor((std::log2(rmax) - bins.log2_rmin) * bins_per_octave)) + 1;

    std::vector<double> num(bins.count, 0.0), den(bins.count, 0.0);
    for (std::size_t j = 0; j < nc; ++j) {
        const double wy = m.col_grid.weights[j];
        for (std::size_t i = 0; i < nr; ++i) {
            const int b = bins.index(xa[i] + yb[j]);
            const double wxy = m.row_grid.weights[i] * wy;
            num[b] += wxy * m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) /
                      (swx[i] * swy[j]);
            den[b] += wxy;
        }
    }
    std::vector<double> avg(bins.count, 0.0);
    for (int b = 0; b < bins.count; ++b)
        if (den[b] > 0.0) avg[b] = num[b] / den[b];

    KernelMatrix out;
    out.row_grid = m.row_grid;
    out.col_grid = m.col_grid;
    {
        std::ostringstream lbl;
        lbl << "Q[" << alpha << "," << beta << "]bins{" << m.label << "}";
        out.label = lbl.str();
    }
    out.entries.resize(static_cast<Eigen::Index>(nr), static_cast<Eigen::Index>(nc));
    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t i = 0; i < nr; ++i)
            out.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                swx[i] * avg[bins.index(xa[i] + yb[j])] * swy[j];
    out.kernel = [bins, avg, alpha, beta](double x, double y) {
        return avg[bins.index(std::pow(x, alpha) + std::pow(y, beta))];
    };
    return out;
}

KernelMatrix project_q_via_interpolant(const KernelMatrix& m, double alpha, double beta,
                                       const JacobiRule& rule) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("project_q_via_interpolant: alpha, beta must be > 0");
    const std::size_t nr = m.row_grid.size(), nc = m.col_grid.size();
    if (nr < 2 || nc < 2)
        throw std::invalid_argument("project_q_via_interpolant: degenerate grids");

    // unscaled kernel samples on the log-log lattice
    std::vector<double> lx(nr), ly(nc);
    for (std::size_t i = 0; i < nr; ++i) lx[i] = std::log(m.row_grid.points[i]);
    for (std::size_t j = 0; j < nc; ++j) ly[j] = std::log(m.col_grid.points[j]);
    Eigen::MatrixXd ksamp(nr, nc);
    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t i = 0; i < nr; ++i)
            ksamp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) /
                std::sqrt(m.row_grid.weights[i] * m.col_grid.weights[j]);

    auto locate = [](const std::vector<double>& grid, double t, bool& clamped) -> std::pair<std::size_t, double> {
        if (t <= grid.front()) {
            clamped = clamped || t < grid.front();
            return {0, 0.0};
        }
        if (t >= grid.back()) {
            clamped = clamped || t > grid.back();
            return {grid.size() - 2, 1.0};
        }
        const std::size_t hi =
            static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), t) - grid.begin());
        const std::size_t lo = hi - 1;
        return {lo, (t - grid[lo]) / (grid[hi] - grid[lo])};
    };

    bool clamped = false;
    auto interp = [&](double x, double y) {
        const auto [i, fx] = locate(lx, std::log(x), clamped);
        const auto [j, fy] = locate(ly, std::log(y), clamped);
        const Eigen::Index ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
        return (1.0 - fx) * ((1.0 - fy) * ksamp(ii, jj) + fy * ksamp(ii, jj + 1)) +
               fx * ((1.0 - fy) * ksamp(ii + 1, jj) + fy * ksamp(ii + 1, jj + 1));
    };

    Symbol phi = project_Q(interp, alpha, beta, rule);
    KernelMatrix out = assemble_distorted(phi, alpha, beta, m.row_grid, m.col_grid);
    std::ostringstream lbl;
    lbl << "Q[" << alpha << "," << beta << "]interp{" << m.label << "}";
    if (clamped) lbl << "(nearest-level extension used)";
    out.label = lbl.str();
    return out;
}

Symbol project_P(const KernelFn& k, double tol, int max_doublings) {
    Symbol s;
    s.label = "P-projected kernel";
    s.eval = [k, tol, max_doublings](double x) {
        // open-interval midpoint refinement of (1/x) int_0^x k(t, x-t) dt
        double prev = 0.0, prev_diff = std::numeric_limits<double>::infinity();
        double first_diff = 0.0, last_diff = 0.0, cur = 0.0;
        int growth_steps = 0;
        std::size_t n = 16;
        for (int level = 0; level <= max_doublings; ++level, n *= 2) {
            const double h = x / static_cast<double>(n);
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = (static_cast<double>(i) + 0.5) * h;
                acc += k(t, x - t);
            }
            cur = acc * h / x;
            if (level > 0) {
                const double diff = std::abs(cur - prev);
                if (level == 1) first_diff = diff;
                last_diff = diff;
                if (diff <= tol * (std::abs(cur) + 1e-300)) return cur;
                if (diff > prev_diff * 1.05) {
                    // power-law divergence: refinement differences keep growing
                    if (++growth_steps >= 3) {
                        std::ostringstream msg;
                        msg << "project_P: anti-diagonal integral at x = " << x
                            << " fails the Cauchy refinement test (divergent)";
                        throw DivergentIntegral(msg.str(), cur, diff / prev_diff);
                    }
                } else {
                    growth_steps = 0;
                }
                prev_diff = diff;
            }
            prev = cur;
        }
        // differences never started shrinking: logarithmic-type divergence
        if (last_diff > 0.25 * first_diff) {
            std::ostringstream msg;
            msg << "project_P: anti-diagonal integral at x = " << x
                << " is non-Cauchy under refinement (divergent)";
            throw DivergentIntegral(msg.str(), cur, last_diff / (first_diff + 1e-300));
        }
        return cur;  // best effort after max refinement
    };
    return s;
}

Symbol project_P_weighted(const KernelFn& k, double a, double b, int nodes) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("project_P_weighted: weights need a, b > 0");
    const JacobiRule rule = gauss_jacobi01(nodes, a, b);
    const double wsum = rule.weight_sum();
    auto nds = rule.nodes;
    auto wts = rule.weights;
    Symbol s;
    s.label = "P-weighted projected kernel";
    s.eval = [k, nds, wts, wsum](double x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < nds.size(); ++i) {
            const double t = x * nds[i];
            acc += wts[i] * k(t, x - t);
        }
        return acc / wsum;
    };
    return s;
}

double polar_integrate(const KernelFn& f, double alpha, double beta, const Grid& radial,
                       const JacobiRule& rule) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("polar_integrate: alpha, beta must be > 0");
    const double ia = 1.0 / alpha, ib = 1.0 / beta;
    const double rad_exp = ia + ib - 1.0;
    double total = 0.0, top_octave = 0.0;
    const double top_cut = radial.points.back() * 0.5;
    for (std::size_t q = 0; q < radial.size(); ++q) {
        const double r = radial.points[q];
        double ang = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            double x, y;
            level_point(r, rule.nodes[i], ia, ib, x, y);
            const double v = f(x, y);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "polar_integrate: non-finite integrand at r = " << r;
                throw std::runtime_error(msg.str());
            }
            ang += rule.weights[i] * v;
        }
        const double term = radial.weights[q] * std::pow(r, rad_exp) * ang;
        total += term;
        if (r >= top_cut) top_octave += term;
    }
    total /= alpha * beta;
    top_octave /= alpha * beta;
    if (std::abs(top_octave) > 0.01 * std::abs(total) + 1e-14) {
        std::ostringstream msg;
        msg << "polar_integrate: non-convergent radial tail (top octave carries "
            << top_octave << " of total " << total << "); extend the radial grid";
        throw std::runtime_error(msg.str());
    }
    return total;
}

}  // namespace dhlab
