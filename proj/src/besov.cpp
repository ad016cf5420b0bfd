#include "dhlab/besov.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "dhlab/fft.hpp"

namespace dhlab {

namespace {

bool is_inf(double p) { return std::isinf(p) && p > 0.0; }

void check_p(double p) {
    if (std::isnan(p) || p <= 0.0)
        throw std::invalid_argument("band/besov norm: p must lie in (0, inf]");
}

std::size_t next_pow2(std::size_t n) {
    std::size_t v = 1;
    while (v < n) v <<= 1;
    return v;
}

// Bands whose open interval (2^{j-1}, 2^{j+1}) meets the open interior of the
// declared support are the ones that can carry mass.
bool band_meets_support(int j, const Interval& s) {
    return std::exp2(j + 1) > s.lo && std::exp2(j - 1) < s.hi;
}

}  // namespace

double band_norm(const Symbol& phi, int j, double p, const FourierConfig& cfg) {
    check_p(p);
    if (cfg.samples < 8) throw std::invalid_argument("band_norm: samples must be >= 8");
    if (cfg.oversample < 1) throw std::invalid_argument("band_norm: oversample must be >= 1");
    if (phi.support && !band_meets_support(j, *phi.support)) return 0.0;

    static const PartitionFunction v = build_partition();
    const double a = std::exp2(j - 1);
    const double b = std::exp2(j + 1);
    const int m = cfg.samples;
    const double dt = (b - a) / m;

    // trapezoid-weighted samples of g = v_j * phi
    std::vector<double> s(static_cast<std::size_t>(m) + 1);
    bool any = false;
    for (int i = 0; i <= m; ++i) {
        const double t = a + dt * i;
        const double g = v.band(j, t) * phi(t);
        if (!std::isfinite(g)) {
            std::ostringstream msg;
            msg << "band_norm: non-finite sample of v_j*phi at t = " << t << " (j = " << j << ")";
            throw std::runtime_error(msg.str());
        }
        const double w = (i == 0 || i == m) ? 0.5 * dt : dt;
        s[i] = g * w;
        any = any || g != 0.0;
    }
    if (!any) return 0.0;

    const std::size_t len = cfg.oversample * next_pow2(s.size());
    s.resize(len, 0.0);
    const std::vector<std::complex<double>> spec = rfft(s);
    const std::size_t bins = spec.size();  // len/2 + 1

    std::vector<double> mag(bins);
    double fmax = 0.0;
    for (std::size_t k = 0; k < bins; ++k) {
        mag[k] = std::abs(spec[k]);
        fmax = std::max(fmax, mag[k]);
    }
    if (fmax == 0.0) return 0.0;

    // per-octave maxima over k in [2^o, 2^{o+1})
    std::vector<double> omax;
    for (std::size_t lo = 1; lo < bins; lo <<= 1) {
        const std::size_t hi = std::min(bins, lo << 1);
        double mx = 0.0;
        for (std::size_t k = lo; k < hi; ++k) mx = std::max(mx, mag[k]);
        omax.push_back(mx);
    }
    // first octave from which every later octave stays below rel_tail*fmax
    const double thresh = cfg.rel_tail * fmax;
    std::size_t tail_start = omax.size();
    for (std::size_t o = omax.size(); o-- > 0;) {
        if (omax[o] < thresh)
            tail_start = o;
        else
            break;
    }
    if (omax.size() - tail_start < 3) {
        double achieved = 0.0;
        for (std::size_t o = omax.size() >= 3 ? omax.size() - 3 : 0; o < omax.size(); ++o)
            achieved = std::max(achieved, omax[o] / fmax);
        std::ostringstream msg;
        msg << "band_norm: insufficient frequency window for band j = " << j
            << " (tail ratio " << achieved << " vs rel_tail " << cfg.rel_tail
            << "); increase samples or rel_tail";
        throw InsufficientFrequencyWindow(msg.str(), achieved);
    }
    // integrate through the end of the third all-below octave
    const std::size_t k_end = std::min(bins, std::size_t{1} << (tail_start + 3));

    if (is_inf(p)) {
        double sup = 0.0;
        for (std::size_t k = 0; k < k_end; ++k) sup = std::max(sup, mag[k]);
        return sup;
    }
    const double dxi = 2.0 * M_PI / (static_cast<double>(len) * dt);
    double acc = std::pow(mag[0], p);
    for (std::size_t k = 1; k < k_end; ++k) acc += 2.0 * std::pow(mag[k], p);
    return std::pow(acc * dxi, 1.0 / p);
}

double besov_norm(const Symbol& phi, double p, double s, int j_lo, int j_hi,
                  const FourierConfig& cfg) {
    check_p(p);
    if (j_lo > j_hi) throw std::invalid_argument("besov_norm: empty octave range");
    if (phi.support) {
        std::vector<int> missing;
        // scan a generous window around the support octaves
        const int lo_oct = static_cast<int>(std::floor(std::log2(phi.support->lo))) - 2;
        const int hi_oct = static_cast<int>(std::ceil(std::log2(phi.support->hi))) + 2;
        for (int j = lo_oct; j <= hi_oct; ++j)
            if (band_meets_support(j, *phi.support) && (j < j_lo || j > j_hi))
                missing.push_back(j);
        if (!missing.empty()) {
            std::ostringstream msg;
            msg << "besov_norm: declared support not covered; missing octaves:";
            for (int j : missing) msg << " " << j;
            throw std::invalid_argument(msg.str());
        }
    }
    if (is_inf(p)) {
        double sup = 0.0;
        for (int j = j_lo; j <= j_hi; ++j)
            sup = std::max(sup, std::exp2(j * s) * band_norm(phi, j, p, cfg));
        return sup;
    }
    double acc = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double t = std::exp2(j * s) * band_norm(phi, j, p, cfg);
        if (t > 0.0) acc += std::pow(t, p);
    }
    return acc > 0.0 ? std::pow(acc, 1.0 / p) : 0.0;
}

BandDecomposition decay_profile(const Symbol& phi, double s, int j_lo, int j_hi,
                                const FourierConfig& cfg) {
    if (j_lo > j_hi) throw std::invalid_argument("decay_profile: empty octave range");
    BandDecomposition d;
    d.j_lo = j_lo;
    d.j_hi = j_hi;
    d.p = std::numeric_limits<double>::infinity();
    d.s = s;
    d.band_norms.reserve(j_hi - j_lo + 1);
    for (int j = j_lo; j <= j_hi; ++j)
        d.band_norms.push_back(std::exp2(j * s) *
                               band_norm(phi, j, std::numeric_limits<double>::infinity(), cfg));
    return d;
}

}  // namespace dhlab
