#ifndef DHLAB_SYMBOL_HPP
#define DHLAB_SYMBOL_HPP

#include <functional>
#include <optional>
#include <string>

namespace dhlab {

struct Interval {
    double lo;
    double hi;
};

/// An evaluable symbol phi on (0,inf). Symbols are immutable evaluators;
/// consumers sample them on their own grids. `support`, when declared, is an
/// interval outside which eval is exactly zero. `interval_mean`, when set,
/// returns the exact average of phi over [lo,hi] (used by cell-averaged
/// assembly of rough symbols; a quadrature fallback covers the rest).
struct Symbol {
    std::function<double(double)> eval;
    std::optional<Interval> support;
    std::string label;
    std::function<double(double, double)> interval_mean;

    double operator()(double t) const { return eval(t); }

    /// Average of phi over [lo, hi] (lo < hi).
    double mean(double lo, double hi) const;
};

/// Characteristic function of (1, 1+2/n]; left endpoint excluded, right
/// included (measure-zero convention, fixed for reproducibility).
Symbol indicator_phi_n(int n);

/// phi(t) = exp(-t)
Symbol exp_symbol();

/// phi(t) = v(t/lambda) with v the dyadic partition generator;
/// support [lambda/2, 2*lambda].
Symbol bump(double lambda);

/// psi(t) = t^sigma * phi(t); support inherited.
Symbol power_weight(const Symbol& phi, double sigma);

}  // namespace dhlab

#endif
