#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dhlab/partition.hpp"
#include "dhlab/symbol.hpp"

using namespace dhlab;

TEST_CASE("indicator phi_n endpoints and values") {
    Symbol p1 = indicator_phi_n(1);
    CHECK(p1(2.0) == 1.0);
    CHECK(p1(3.5) == 0.0);

    Symbol p8 = indicator_phi_n(8);
    CHECK(p8(1.1) == 1.0);
    CHECK(p8(1.3) == 0.0);
    // half-open convention: (1, 1+2/n]
    CHECK(p8(1.0) == 0.0);
    CHECK(p8(1.25) == 1.0);

    CHECK_THROWS_AS(indicator_phi_n(0), std::invalid_argument);
    CHECK_THROWS_AS(indicator_phi_n(-2), std::invalid_argument);
}

TEST_CASE("indicator integral equals interval width") {
    Symbol p4 = indicator_phi_n(4);
    // exact interval mean knows the width
    CHECK(p4.mean(0.5, 2.5) == doctest::Approx(0.5 / 2.0));  // overlap 0.5 over len 2
    CHECK(p4.mean(1.0, 1.5) == doctest::Approx(1.0));
}

TEST_CASE("exp symbol values") {
    Symbol e = exp_symbol();
    CHECK(e(1e-12) == doctest::Approx(1.0));
    CHECK(e(std::log(2.0)) == doctest::Approx(0.5));
    CHECK(e.mean(0.0 + 1e-9, 1.0) == doctest::Approx((1.0 - std::exp(-1.0)) / 1.0).epsilon(1e-6));
}

TEST_CASE("bump support and partition-of-unity identity") {
    Symbol b1 = bump(1.0);
    CHECK(b1(0.25) == 0.0);
    REQUIRE(b1.support.has_value());
    CHECK(b1.support->lo == doctest::Approx(0.5));
    CHECK(b1.support->hi == doctest::Approx(2.0));

    Symbol b4 = bump(4.0);
    CHECK(b4.support->lo == doctest::Approx(2.0));
    CHECK(b4.support->hi == doctest::Approx(8.0));
    CHECK_THROWS_AS(bump(0.0), std::invalid_argument);

    // bump(1)(t) plus the adjacent dilates restores 1
    PartitionFunction v = build_partition();
    const double t = 1.3;
    double total = b1(t);
    for (int j = -3; j <= 3; ++j)
        if (j != 0) total += v.band(j, t);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bump dilation identity is exact") {
    Symbol b1 = bump(1.0), b2 = bump(2.0);
    for (double t : {0.6, 0.9, 1.0, 1.7, 2.5, 3.9}) CHECK(b2(t) == b1(t / 2.0));
}

TEST_CASE("power weight") {
    Symbol e = exp_symbol();
    Symbol same = power_weight(e, 0.0);
    CHECK(same(0.7) == doctest::Approx(e(0.7)));

    Symbol p4 = power_weight(indicator_phi_n(4), 1.0);
    CHECK(p4(1.25) == doctest::Approx(1.25));

    Symbol bm = power_weight(bump(1.0), -1.0);
    CHECK(bm(1.0) == doctest::Approx(bump(1.0)(1.0)));
}

TEST_CASE("power weight composes additively") {
    Symbol e = exp_symbol();
    Symbol ab = power_weight(power_weight(e, 0.7), -1.3);
    Symbol direct = power_weight(e, 0.7 - 1.3);
    for (double t : {0.1, 0.5, 1.0, 3.0, 17.0})
        CHECK(ab(t) == doctest::Approx(direct(t)).epsilon(1e-14));
}

TEST_CASE("declared support is honored at spot checks") {
    for (const Symbol& s : {indicator_phi_n(8), bump(2.0)}) {
        REQUIRE(s.support.has_value());
        const double lo = s.support->lo, hi = s.support->hi;
        for (int i = 0; i < 16; ++i) {
            const double below = lo * (0.5 + 0.03 * i);
            const double above = hi * (1.01 + 0.25 * i);
            if (below < lo) CHECK(s(below) == 0.0);
            CHECK(s(above) == 0.0);
        }
    }
}

TEST_CASE("partition function axioms") {
    PartitionFunction v = build_partition();
    CHECK(v(0.4) == 0.0);
    CHECK(v(0.5) == 0.0);
    CHECK(v(2.0) == 0.0);
    CHECK(v(1.0) > 0.0);

    // sum_j v(1/2^j) = 1 (single term at x = 1)
    double s1 = 0.0;
    for (int j = -4; j <= 4; ++j) s1 += v.band(j, 1.0);
    CHECK(s1 == doctest::Approx(1.0).epsilon(1e-14));

    // only bands 0 and 1 overlap at x = 1.5
    CHECK(v(1.5) + v(1.5 / 2.0) == doctest::Approx(1.0).epsilon(1e-14));

    // partition sum deviation over [2^-8, 2^8]
    double worst = 0.0;
    const int samples = 10000;
    for (int i = 0; i <= samples; ++i) {
        const double x = std::exp2(-8.0 + 16.0 * i / samples);
        const int j0 = static_cast<int>(std::floor(std::log2(x)));
        double total = 0.0;
        for (int j = j0 - 2; j <= j0 + 2; ++j) total += v.band(j, x);
        worst = std::max(worst, std::abs(total - 1.0));
    }
    CHECK(worst < 1e-12);
}
