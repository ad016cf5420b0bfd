#ifndef DHLAB_BESOV_HPP
#define DHLAB_BESOV_HPP

#include <stdexcept>
#include <vector>

#include "dhlab/partition.hpp"
#include "dhlab/symbol.hpp"

namespace dhlab {

/// Discretization parameters for the dyadic-band Fourier norms.
/// The transform convention is (Fg)(xi) = int g(t) e^{-i xi t} dt with the
/// L^p norm over frequency taken in plain d(xi); constants are immaterial to
/// the ratio/scaling assertions downstream.
struct FourierConfig {
    int samples = 4096;      // M: time samples per band (trapezoid rule)
    int oversample = 8;      // q: zero-padding factor for frequency resolution
    double rel_tail = 1e-8;  // tail stop: |Fg| below rel_tail*max for 3 octaves
};

/// Raised when |Fg| has not fallen below rel_tail*max for three consecutive
/// frequency octaves within the Nyquist window. Carries the best tail ratio
/// actually achieved; raise `samples` or `rel_tail` accordingly.
struct InsufficientFrequencyWindow : std::runtime_error {
    InsufficientFrequencyWindow(const std::string& msg, double ratio)
        : std::runtime_error(msg), achieved_ratio(ratio) {}
    double achieved_ratio;
};

struct BandDecomposition {
    int j_lo = 0;
    int j_hi = 0;
    std::vector<double> band_norms;  // indexed j - j_lo; entries 2^{js}*||F(v_j phi)||
    double p = 2.0;
    double s = 0.0;
};

/// ||F(v_j phi)||_{L^p} over frequency. p in (0, inf]; pass
/// std::numeric_limits<double>::infinity() for the sup norm. Bands disjoint
/// from the declared support return exactly 0 without touching the FFT.
double band_norm(const Symbol& phi, int j, double p, const FourierConfig& cfg = {});

/// l^p sum over j in [j_lo, j_hi] of 2^{js} * band_norm (sup for p = inf).
/// When phi declares a support, the range must cover every band meeting it;
/// otherwise the error lists the missing octaves.
double besov_norm(const Symbol& phi, double p, double s, int j_lo, int j_hi,
                  const FourierConfig& cfg = {});

/// Raw profile (j, 2^{js} * band_norm_inf) over [j_lo, j_hi]; no thresholding.
BandDecomposition decay_profile(const Symbol& phi, double s, int j_lo, int j_hi,
                                const FourierConfig& cfg = {});

}  // namespace dhlab

#endif
