#ifndef DHLAB_FFT_HPP
#define DHLAB_FFT_HPP

#include <complex>
#include <vector>

namespace dhlab {

/// Real-to-complex forward FFT of length n: out has n/2+1 bins. Plans are
/// created with FFTW_ESTIMATE so results are run-to-run deterministic;
/// plan creation is serialized internally (FFTW planning is not thread safe).
std::vector<std::complex<double>> rfft(const std::vector<double>& in);

/// Inverse of rfft: complex half-spectrum (n/2+1 bins) -> real signal of
/// length n, scaled by 1/n (round trip is the identity).
std::vector<double> irfft(const std::vector<std::complex<double>>& spec, std::size_t n);

}  // namespace dhlab

#endif
