#include "dhlab/symbol.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dhlab/partition.hpp"

namespace dhlab {

namespace {

// 16-point Gauss-Legendre nodes/weights on [0,1]
constexpr int kGlN = 16;
constexpr double kGlX[kGlN] = {
    0.005299532504175031, 0.0277124884633837,   0.06718439880608412, 0.1222977958224985,
    0.1910618777986781,   0.2709916111713863,   0.3591982246103705,  0.4524937450811813,
    0.5475062549188187,   0.6408017753896295,   0.7290083888286137,  0.8089381222013219,
    0.8777022041775015,   0.9328156011939159,   0.9722875115366163,  0.994700467495825};
constexpr double kGlW[kGlN] = {
    0.013576229705877047, 0.03112676196932395,  0.04757925584124639, 0.06231448562776694,
    0.07479799440828837,  0.08457825969750127,  0.09130170752246179, 0.0947253052275343,
    0.0947253052275343,   0.09130170752246179,  0.08457825969750127, 0.07479799440828837,
    0.06231448562776694,  0.04757925584124639,  0.03112676196932395, 0.013576229705877047};

}  // namespace

double Symbol::mean(double lo, double hi) const {
    if (!(lo < hi)) throw std::invalid_argument("Symbol::mean: requires lo < hi");
    if (interval_mean) return interval_mean(lo, hi);
    if (support && (hi <= support->lo || lo > support->hi)) return 0.0;
    double s = 0.0;
    const double len = hi - lo;
    for (int i = 0; i < kGlN; ++i) s += kGlW[i] * eval(lo + len * kGlX[i]);
    return s;
}

Symbol indicator_phi_n(int n) {
    if (n <= 0) throw std::invalid_argument("indicator_phi_n: n must be >= 1");
    const double lo = 1.0;
    const double hi = 1.0 + 2.0 / n;
    Symbol s;
    s.eval = [lo, hi](double t) { return (t > lo && t <= hi) ? 1.0 : 0.0; };
    s.support = Interval{lo, hi};
    {
        std::ostringstream lbl;
        lbl << "phi_n(" << n << ")";
        s.label = lbl.str();
    }
    s.interval_mean = [lo, hi](double a, double b) {
        const double overlap = std::min(b, hi) - std::max(a, lo);
        return overlap > 0.0 ? overlap / (b - a) : 0.0;
    };
    return s;
}

Symbol exp_symbol() {
    Symbol s;
    s.eval = [](double t) { return std::exp(-t); };
    s.label = "exp";
    // closed-form interval average
    s.interval_mean = [](double a, double b) {
        return (std::exp(-a) - std::exp(-b)) / (b - a);
    };
    return s;
}

Symbol bump(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("bump: lambda must be > 0");
    PartitionFunction v = build_partition();
    Symbol s;
    s.eval = [v, lambda](double t) { return v(t / lambda); };
    s.support = Interval{0.5 * lambda, 2.0 * lambda};
    {
        std::ostringstream lbl;
        lbl << "bump(" << lambda << ")";
        s.label = lbl.str();
    }
    return s;
}

Symbol power_weight(const Symbol& phi, double sigma) {
    Symbol s;
    auto base = phi.eval;
    s.eval = [base, sigma](double t) { return std::pow(t, sigma) * base(t); };
    s.support = phi.support;
    {
        std::ostringstream lbl;
        lbl << "t^" << sigma << "*" << (phi.label.empty() ? "phi" : phi.label);
        s.label = lbl.str();
    }
    return s;
}

}  // namespace dhlab
