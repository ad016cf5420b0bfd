#ifndef DHLAB_PARTITION_HPP
#define DHLAB_PARTITION_HPP

namespace dhlab {

/// Smooth dyadic partition generator v: C^inf, supp v = [1/2, 2], v > 0 on
/// (1/2, 2), and sum_j v(x/2^j) = 1 for every x > 0. Built by normalizing
/// rho(x) = exp(-1/((x-1/2)(2-x))) by S(x) = sum_j rho(x/2^j); S is
/// 2-periodic in log2(x), so the partition identity holds exactly.
class PartitionFunction {
public:
    /// generator rho (unnormalized bump on (1/2, 2))
    static double generator(double x);

    /// v(x)
    double operator()(double x) const;

    /// v_j(x) = v(x / 2^j)
    double band(int j, double x) const;
};

PartitionFunction build_partition();

}  // namespace dhlab

#endif
