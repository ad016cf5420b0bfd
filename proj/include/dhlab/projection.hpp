#ifndef DHLAB_PROJECTION_HPP
#define DHLAB_PROJECTION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dhlab/grid.hpp"
#include "dhlab/op.hpp"
#include "dhlab/symbol.hpp"

namespace dhlab {

/// Gauss-Jacobi rule on (0,1) for integrals
///   int_0^1 u^exp_u (1-u)^exp_1mu g(u) du  ~=  sum_i weights[i] g(nodes[i]),
/// built by Golub-Welsch from the Jacobi recurrence. Nodes lie in (0,1),
/// weights are positive and sum to B(exp_u+1, exp_1mu+1).
struct JacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double exp_u = 0.0;
    double exp_1mu = 0.0;

    double weight_sum() const;
};

/// exp_u, exp_1mu > -1; n >= 1.
JacobiRule gauss_jacobi01(int n, double exp_u, double exp_1mu);

/// Angular rule of the averaging projection: the measure
/// cos^(2/alpha-1)t sin^(2/beta-1)t dt on (0, pi/2) becomes, under u = sin^2 t,
/// (1/2) u^(1/beta-1) (1-u)^(1/alpha-1) du; this returns the (0,1) rule for
/// the du factor (weight sum B(1/alpha, 1/beta) = 2 A(alpha,beta)).
JacobiRule angular_rule(double alpha, double beta, int n = 64);

/// A(alpha,beta) = (1/2) B(1/alpha, 1/beta), via log-gamma.
double beta_normalizer(double alpha, double beta);

/// Averaging projection applied to an evaluable kernel: the returned symbol is
///   phi(r) = (1/(2 A(alpha,beta))) int_0^1 u^(1/beta-1)(1-u)^(1/alpha-1)
///            k((r(1-u))^(1/alpha), (r u)^(1/beta)) du,
/// the weighted average of k over the level set x^alpha + y^beta = r. Exact
/// (to rounding) on kernels constant along level sets.
Symbol project_Q(const KernelFn& k, double alpha, double beta, const JacobiRule& rule);

/// Matrix-level averaging projection: the orthogonal projection, in the
/// weighted Frobenius geometry of the Nystrom scaling, onto kernels constant
/// on log-spaced bins of the level value r = x^alpha + y^beta. Exactly
/// idempotent, self-adjoint and contractive by construction; approximates the
/// continuous projection to O(1/bins_per_octave) on smooth symbols. The
/// output carries the piecewise-constant symbol as its kernel evaluator
/// (values outside the covered level range clamp to the nearest bin).
KernelMatrix project_q_matrix(const KernelMatrix& m, double alpha, double beta,
                              int bins_per_octave = 256);

/// Alternative matrix route kept as a cross-check: extend the matrix kernel
/// off-grid by bilinear interpolation in (log x, log y), average along level
/// curves with the angular rule, and reassemble. Not exactly projective
/// (quadrature + interpolation error ~1e-3 on smooth data); level values
/// beyond the covered range use nearest-level extension and flag the label.
KernelMatrix project_q_via_interpolant(const KernelMatrix& m, double alpha, double beta,
                                       const JacobiRule& rule);

/// Raised when anti-diagonal averaging integrals fail the Cauchy refinement
/// test (their exponents make them genuinely divergent).
struct DivergentIntegral : std::runtime_error {
    DivergentIntegral(const std::string& msg, double last, double growth)
        : std::runtime_error(msg), last_value(last), growth_ratio(growth) {}
    double last_value;
    double growth_ratio;
};

/// Plain averaging projection onto Hankel form:
///   phi(x) = (1/x) int_0^x k(t, x-t) dt,
/// by open-interval midpoint refinement with a Cauchy stopping test; divergent
/// anti-diagonal integrals are reported via DivergentIntegral rather than
/// returned as numbers. Coincides with project_Q at alpha = beta = 1 up to
/// quadrature tolerance.
Symbol project_P(const KernelFn& k, double tol = 1e-10, int max_doublings = 14);

/// Weighted averaging projection:
///   phi(x) = int_0^x t^a (x-t)^b k(t,x-t) dt / int_0^x t^a (x-t)^b dt,
/// via the Gauss-Jacobi rule with weight u^a (1-u)^b. a, b > 0.
Symbol project_P_weighted(const KernelFn& k, double a, double b, int nodes = 64);

/// Generalized polar integration of f over the quadrant truncated to the
/// radial grid:
///   (2/(alpha beta)) int r^(1/alpha+1/beta-1)
///        int f(r^(1/a)cos^(2/a)t, r^(1/b)sin^(2/b)t) dmu(t) dr.
/// Throws when the outermost radial octave still contributes more than 1% of
/// the total (non-convergent tail).
double polar_integrate(const KernelFn& f, double alpha, double beta, const Grid& radial,
                       const JacobiRule& rule);

}  // namespace dhlab

#endif
