#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dhlab/kernels.hpp"

using namespace dhlab;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
    const kern::Ops* avx = kern::avx2_ops();
    if (avx == nullptr) return;  // nothing to compare on this hardware
    const kern::Ops& ref = kern::scalar_ops();

    for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{64}, std::size_t{1003}}) {
        auto a = random_vec(n, 11 + n);
        auto b = random_vec(n, 29 + n);

        // reductions reassociate: tolerance scales with length
        const double tol = 1e-14 * static_cast<double>(n);
        CHECK(ref.dot(a.data(), b.data(), n) ==
              doctest::Approx(avx->dot(a.data(), b.data(), n)).epsilon(tol));
        CHECK(ref.nrm2sq(a.data(), n) ==
              doctest::Approx(avx->nrm2sq(a.data(), n)).epsilon(tol));

        auto y1 = random_vec(n, 3), y2 = y1;
        ref.axpy(0.37, a.data(), y1.data(), n);
        avx->axpy(0.37, a.data(), y2.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == doctest::Approx(y2[i]).epsilon(1e-15));

        std::vector<double> o1(n), o2(n);
        ref.mul3(o1.data(), 1.7, a.data(), b.data(), n);
        avx->mul3(o2.data(), 1.7, a.data(), b.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(o1[i] == o2[i]);

        auto s1 = a, s2 = a;
        ref.scale(s1.data(), -2.25, n);
        avx->scale(s2.data(), -2.25, n);
        for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]);
    }
}

TEST_CASE("complex pointwise multiply matches on both paths") {
    const kern::Ops* avx = kern::avx2_ops();
    const kern::Ops& ref = kern::scalar_ops();
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{33}, std::size_t{256}}) {
        auto a = random_vec(2 * n, 5 + n);
        auto b = random_vec(2 * n, 17 + n);
        std::vector<double> o1(2 * n), o2(2 * n);
        ref.cmul(o1.data(), a.data(), b.data(), n);
        // hand-check one element
        CHECK(o1[0] == doctest::Approx(a[0] * b[0] - a[1] * b[1]));
        if (avx == nullptr) continue;
        avx->cmul(o2.data(), a.data(), b.data(), n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            CHECK(o1[i] == doctest::Approx(o2[i]).epsilon(1e-14));
    }
}

TEST_CASE("matvec helpers agree with naive triple loop") {
    const std::size_t rows = 37, cols = 23;
    auto a = random_vec(rows * cols, 101);
    auto x = random_vec(cols, 7);
    auto xt = random_vec(rows, 9);

    std::vector<double> y(rows), yt(cols);
    kern::matvec_colmajor(a.data(), rows, cols, x.data(), y.data());
    kern::matvec_t_colmajor(a.data(), rows, cols, xt.data(), yt.data());

    for (std::size_t i = 0; i < rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < cols; ++j) s += a[j * rows + i] * x[j];
        CHECK(y[i] == doctest::Approx(s).epsilon(1e-13));
    }
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows; ++i) s += a[j * rows + i] * xt[i];
        CHECK(yt[j] == doctest::Approx(s).epsilon(1e-13));
    }
}

TEST_CASE("gram frobenius sum matches naive computation") {
    const std::size_t rows = 19, cols = 11;
    auto a = random_vec(rows * cols, 41);
    double naive = 0.0;
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t l = 0; l < cols; ++l) {
            double d = 0.0;
            for (std::size_t i = 0; i < rows; ++i) d += a[j * rows + i] * a[l * rows + i];
            naive += d * d;
        }
    CHECK(kern::gram_frob_sq_colmajor(a.data(), rows, cols) ==
          doctest::Approx(naive).epsilon(1e-12));
}
