#include "dhlab/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dhlab {

Grid log_grid(int j_min, int j_max, int ppo) {
    if (j_min >= j_max) {
        std::ostringstream msg;
        msg << "log_grid: j_min (" << j_min << ") must be < j_max (" << j_max << ")";
        throw std::invalid_argument(msg.str());
    }
    if (ppo <= 0) {
        std::ostringstream msg;
        msg << "log_grid: ppo (" << ppo << ") must be positive";
        throw std::invalid_argument(msg.str());
    }
    const std::size_t n = static_cast<std::size_t>(j_max - j_min) * ppo + 1;
    const double h = std::log(2.0) / ppo;
    Grid g;
    g.points.resize(n);
    g.weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = std::exp2(j_min + static_cast<double>(k) / ppo);
        g.points[k] = x;
        g.weights[k] = h * x;
    }
    g.weights.front() *= 0.5;
    g.weights.back() *= 0.5;
    g.dyadic = DyadicMeta{j_min, j_max, ppo};
    return g;
}

Grid power_transform(const Grid& g, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("power_transform: exponent must be > 0");
    Grid out;
    out.points.resize(g.size());
    out.weights.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = g.points[i];
        out.points[i] = std::pow(x, a);
        out.weights[i] = a * std::pow(x, a - 1.0) * g.weights[i];
    }
    if (a == 1.0) out.dyadic = g.dyadic;
    return out;
}

double integrate(const Grid& g, const std::function<double(double)>& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double v = f(g.points[i]);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "integrate: non-finite integrand value at x = " << g.points[i];
            throw std::runtime_error(msg.str());
        }
        s += g.weights[i] * v;
    }
    return s;
}

std::vector<double> cell_bounds(const Grid& g) {
    const std::size_t n = g.size();
    std::vector<double> b(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) b[i + 1] = std::sqrt(g.points[i] * g.points[i + 1]);
    // half cells at the ends: the covered interval is exactly [x_0, x_{n-1}],
    // matching the halved trapezoid endpoint weights
    b[0] = g.points.front();
    b[n] = g.points.back();
    return b;
}

}  // namespace dhlab
