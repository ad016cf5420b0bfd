#include "dhlab/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace dhlab {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

std::vector<std::complex<double>> rfft(const std::vector<double>& in) {
    const std::size_t n = in.size();
    if (n == 0) return {};
    std::vector<std::complex<double>> out(n / 2 + 1);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), const_cast<double*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    if (plan == nullptr) throw std::runtime_error("rfft: FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

std::vector<double> irfft(const std::vector<std::complex<double>>& spec, std::size_t n) {
    if (spec.size() != n / 2 + 1)
        throw std::invalid_argument("irfft: spectrum length must be n/2+1");
    std::vector<std::complex<double>> tmp(spec);  // c2r destroys its input
    std::vector<double> out(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                    reinterpret_cast<fftw_complex*>(tmp.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw std::runtime_error("irfft: FFTW plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    const double inv = 1.0 / static_cast<double>(n);
    for (double& v : out) v *= inv;
    return out;
}

}  // namespace dhlab
