#include "dhlab/partition.hpp"

#include <cmath>

namespace dhlab {

double PartitionFunction::generator(double x) {
    if (x <= 0.5 || x >= 2.0) return 0.0;
    return std::exp(-1.0 / ((x - 0.5) * (2.0 - x)));
}

double PartitionFunction::operator()(double x) const {
    if (x <= 0.5 || x >= 2.0) return 0.0;
    // at most the bands j in {-1, 0, 1} overlap any point of (1/2, 2)
    const double s = generator(0.5 * x) + generator(x) + generator(2.0 * x);
    return generator(x) / s;
}

double PartitionFunction::band(int j, double x) const {
    return (*this)(std::ldexp(x, -j));
}

PartitionFunction build_partition() { return PartitionFunction{}; }

}  // namespace dhlab
