#ifndef DHLAB_GRID_HPP
#define DHLAB_GRID_HPP

#include <functional>
#include <optional>
#include <vector>

namespace dhlab {

struct DyadicMeta {
    int j_min;
    int j_max;
    int ppo;  // points per octave
};

/// Truncated quadrature grid on (0,inf): strictly increasing positive
/// abscissae with positive weights. Immutable after construction.
struct Grid {
    std::vector<double> points;
    std::vector<double> weights;
    std::optional<DyadicMeta> dyadic;

    std::size_t size() const { return points.size(); }
};

/// Dyadic-logarithmic grid: x_k = 2^(j_min + k/ppo), k = 0..(j_max-j_min)*ppo,
/// with trapezoid weights in the log variable (h*x interior, h*x/2 at the two
/// endpoints, h = ln2/ppo). Throws std::invalid_argument on j_min >= j_max or
/// ppo <= 0.
Grid log_grid(int j_min, int j_max, int ppo);

/// Image of g under x -> x^a with Jacobian-adjusted weights a*x^(a-1)*w.
/// Requires a > 0 (order preserving).
Grid power_transform(const Grid& g, double a);

/// sum_i w_i f(x_i). Throws if f is non-finite at some abscissa (the message
/// names the offending point).
double integrate(const Grid& g, const std::function<double(double)>& f);

/// Geometric cell boundaries b_0 < b_1 < ... < b_n (n = g.size()): cell i is
/// [b_i, b_{i+1}] around x_i, with interior boundaries at sqrt(x_i*x_{i+1}).
/// Used by cell-averaged assembly and the level-bin projection.
std::vector<double> cell_bounds(const Grid& g);

}  // namespace dhlab

#endif
