#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dhlab/op.hpp"
#include "dhlab/spectrum.hpp"

using namespace dhlab;

TEST_CASE("zero symbol assembles to the zero matrix") {
    Symbol z;
    z.eval = [](double) { return 0.0; };
    z.label = "zero";
    Grid g = log_grid(-2, 2, 4);
    CHECK(assemble_distorted(z, 1.0, 1.0, g, g).entries.norm() == 0.0);
    CHECK(assemble_weighted_hankel(z, 0.0, 0.0, g, g).entries.norm() == 0.0);
}

TEST_CASE("alpha=beta=1 distorted operator reproduces the plain Hankel entrywise") {
    Grid g = log_grid(-6, 3, 8);
    Symbol e = exp_symbol();
    KernelMatrix a = assemble_distorted(e, 1.0, 1.0, g, g);
    KernelMatrix b = assemble_weighted_hankel(e, 0.0, 0.0, g, g);
    CHECK((a.entries - b.entries).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("symmetric kernels on equal grids give symmetric matrices") {
    Grid g = log_grid(-5, 3, 8);
    KernelMatrix m = assemble_distorted(exp_symbol(), 2.0, 2.0, g, g);
    CHECK((m.entries - m.entries.transpose()).lpNorm<Eigen::Infinity>() <
          1e-14 * m.entries.lpNorm<Eigen::Infinity>());
}

TEST_CASE("assembly rejects non-finite symbol values with entry location") {
    Symbol bad;
    bad.eval = [](double t) { return t > 2.0 ? INFINITY : 1.0; };
    bad.label = "bad";
    Grid g = log_grid(0, 2, 2);
    CHECK_THROWS_WITH_AS(assemble_distorted(bad, 1.0, 1.0, g, g), doctest::Contains("entry"),
                         std::runtime_error);
}

TEST_CASE("distort_kernel algebra") {
    auto k = [](double x, double y) { return std::exp(-(x + 2.0 * y)) + x * y; };

    // alpha = beta = 1 leaves the kernel unchanged
    KernelFn same = distort_kernel(k, 1.0, 1.0);
    CHECK(same(0.7, 1.3) == doctest::Approx(k(0.7, 1.3)).epsilon(1e-15));

    // double transform with (a,b) then (1/a, 1/b) recovers k
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.1, 4.0);
    const double a = 2.0, b = 0.5;
    KernelFn once = distort_kernel(k, a, b);
    KernelFn back = distort_kernel(once, 1.0 / a, 1.0 / b);
    for (int i = 0; i < 100; ++i) {
        const double x = u(rng), y = u(rng);
        CHECK(back(x, y) == doctest::Approx(k(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("distorted kernel maps to the weighted Hankel kernel") {
    Symbol e = exp_symbol();
    const double alpha = 2.0, beta = 3.0;
    auto kappa = [&](double x, double y) {
        return e(std::pow(x, alpha) + std::pow(y, beta));
    };
    KernelFn mapped = distort_kernel(kappa, alpha, beta);
    const double ea = 0.5 / alpha - 0.5, eb = 0.5 / beta - 0.5;
    for (double x : {0.3, 1.0, 2.5})
        for (double y : {0.4, 1.0, 3.0})
            CHECK(mapped(x, y) ==
                  doctest::Approx(std::pow(x, ea) * std::pow(y, eb) * e(x + y)).epsilon(1e-13));
}

TEST_CASE("unitary image equals sqrt(alpha beta) times the original entrywise") {
    Grid gx = log_grid(-4, 2, 6), gy = log_grid(-3, 3, 6);
    KernelMatrix m = assemble_distorted(exp_symbol(), 1.0, 1.0, gx, gy);

    KernelMatrix id = unitary_image(m, 1.0, 1.0);
    CHECK((id.entries - m.entries).lpNorm<Eigen::Infinity>() == 0.0);

    KernelMatrix two = unitary_image(m, 2.0, 2.0);
    CHECK((two.entries - 2.0 * m.entries).lpNorm<Eigen::Infinity>() <
          1e-13 * m.entries.lpNorm<Eigen::Infinity>());

    // spectra scale by sqrt(alpha beta)
    KernelMatrix im = unitary_image(m, 2.0, 0.5);
    auto s0 = dense_singular_values(m);
    auto s1 = dense_singular_values(im);
    for (std::size_t j = 0; j < std::min<std::size_t>(10, s0.values.size()); ++j)
        CHECK(s1.values[j] ==
              doctest::Approx(s0.values[j]).epsilon(1e-11).scale(s0.values[0]));
}

TEST_CASE("discrete unitary equivalence: distorted vs weighted Hankel on power grids") {
    Grid gx = log_grid(-8, 2, 10), gy = log_grid(-8, 2, 10);
    struct Pair {
        double a, b;
    };
    for (const Pair& ab : {Pair{2.0, 2.0}, Pair{1.0, 3.0}, Pair{0.5, 2.0}}) {
        for (const Symbol& phi : {exp_symbol(), bump(1.0), indicator_phi_n(8)}) {
            KernelMatrix g = assemble_distorted(phi, ab.a, ab.b, gx, gy);
            KernelMatrix w = assemble_weighted_hankel(
                phi, 0.5 / ab.a - 0.5, 0.5 / ab.b - 0.5, power_transform(gx, ab.a),
                power_transform(gy, ab.b));
            const double scale = std::sqrt(ab.a * ab.b);
            auto sg = dense_singular_values(g);
            auto sw = dense_singular_values(w);
            const double s0 = sw.values[0];
            for (std::size_t j = 0; j < std::min<std::size_t>(20, sg.values.size()); ++j)
                CHECK(std::abs(scale * sg.values[j] - sw.values[j]) / s0 < 1e-12);
        }
    }
}

TEST_CASE("weighted Hankel with a = b = -1/2 has log-divergent HS norm in the cutoff") {
    Symbol phi = indicator_phi_n(8);
    double prev = 0.0;
    std::vector<double> values;
    for (int jmin : {-8, -12, -16, -20}) {
        Grid g = log_grid(jmin, 1, 16);
        KernelMatrix m = assemble_weighted_hankel(phi, -0.5, -0.5, g, g, Sampling::cell_mean);
        const double hs2 = m.entries.squaredNorm();
        CHECK(hs2 > prev);
        values.push_back(hs2);
        prev = hs2;
    }
    // growth per 4 octaves of cutoff is roughly constant (log divergence)
    const double d1 = values[1] - values[0];
    const double d2 = values[2] - values[1];
    const double d3 = values[3] - values[2];
    CHECK(d2 == doctest::Approx(d1).epsilon(0.25));
    CHECK(d3 == doctest::Approx(d2).epsilon(0.25));
}

TEST_CASE("fast hankel matvec: trivial cases") {
    std::vector<double> samples(2 * 8 - 1);
    for (std::size_t i = 0; i < samples.size(); ++i)
        samples[i] = std::exp(-0.1 * static_cast<double>(i));
    const double h = 0.25;

    std::vector<double> zero(8, 0.0);
    for (double v : hankel_matvec_fast(samples, h, zero)) CHECK(v == 0.0);

    std::vector<double> e0(8, 0.0);
    e0[0] = 1.0;
    auto col0 = hankel_matvec_fast(samples, h, e0);
    for (std::size_t i = 0; i < col0.size(); ++i)
        CHECK(col0[i] == doctest::Approx(samples[i] * h).epsilon(1e-13));
}

TEST_CASE("fast hankel matvec matches the dense oracle at N = 512") {
    const std::size_t n = 512;
    const double h = 1.0 / 64.0;
    std::vector<double> samples(2 * n - 1);
    for (std::size_t i = 0; i < samples.size(); ++i)
        samples[i] = std::exp(-static_cast<double>(i) * h);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    double vmax = 0.0, hmax = 0.0;
    for (double& x : v) {
        x = u(rng);
        vmax = std::max(vmax, std::abs(x));
    }
    for (double s : samples) hmax = std::max(hmax, std::abs(s * h));

    auto fast = hankel_matvec_fast(samples, h, v);
    REQUIRE(fast.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        double dense = 0.0;
        for (std::size_t j = 0; j < n; ++j) dense += samples[i + j] * h * v[j];
        CHECK(std::abs(fast[i] - dense) < 1e-10 * hmax * vmax * n);
    }

    CHECK_THROWS_AS(hankel_matvec_fast(std::vector<double>{1.0}, h, v),
                    std::invalid_argument);
}

TEST_CASE("fast hankel transpose application") {
    const std::size_t rows = 24, cols = 16;
    std::vector<double> samples(rows + cols - 1);
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = 1.0 / (1.0 + i);
    FastHankel op(samples, 0.5, rows, cols);

    std::vector<double> x(rows), y(cols);
    for (std::size_t i = 0; i < rows; ++i) x[i] = std::sin(0.3 * i);
    op.apply_t(x.data(), y.data());
    for (std::size_t j = 0; j < cols; ++j) {
        double direct = 0.0;
        for (std::size_t i = 0; i < rows; ++i) direct += samples[i + j] * 0.5 * x[i];
        CHECK(y[j] == doctest::Approx(direct).epsilon(1e-12));
    }
}
