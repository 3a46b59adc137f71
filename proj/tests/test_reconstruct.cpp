#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mrsw/reconstruct.hpp"

using namespace mrsw;

TEST_CASE("minmod sign and magnitude laws") {
    CHECK(minmod3(1.0, 2.0, 3.0) == 1.0);
    CHECK(minmod3(-2.0, -1.0, -3.0) == -1.0);
    CHECK(minmod3(1.0, -1.0, 2.0) == 0.0);
    std::vector<double> empty;
    CHECK_THROWS_AS(minmod(empty), EmptyInput);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<double, 4> v{dist(rng), dist(rng), dist(rng), dist(rng)};
        const double m = minmod(v);
        double min_abs = 1e300;
        bool pos = true, neg = true;
        for (double x : v) {
            min_abs = std::min(min_abs, std::abs(x));
            pos = pos && x > 0.0;
            neg = neg && x < 0.0;
        }
        CHECK(std::abs(m) <= min_abs);
        if (!pos && !neg) CHECK(m == 0.0);
        if (pos) CHECK(m > 0.0);
        if (neg) CHECK(m < 0.0);
        // odd symmetry
        std::array<double, 4> nv;
        for (int i = 0; i < 4; ++i) nv[i] = -v[i];
        CHECK(minmod(nv) == -m);
    }
}

TEST_CASE("linear reconstruction reproduces linear data and clips extrema") {
    const double dy = 0.2, theta = 1.3;
    const int m = 9;
    std::vector<double> psi(m), slopes(m), lo(m - 1), hi(m - 1);

    for (int c = 0; c < m; ++c) psi[c] = 2.0 * (c * dy);
    linear_reconstruct(psi, dy, theta, slopes, lo, hi);
    for (int c = 1; c + 1 < m; ++c) CHECK(slopes[c] == doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 1; i + 2 < m; ++i) {
        CHECK(lo[i] == doctest::Approx(psi[i] + dy).epsilon(1e-14));
        CHECK(lo[i] == doctest::Approx(hi[i]).epsilon(1e-14));
    }

    std::fill(psi.begin(), psi.end(), 7.5);
    linear_reconstruct(psi, dy, theta, slopes, lo, hi);
    for (int i = 0; i + 1 < m; ++i) {
        CHECK(lo[i] == 7.5);
        CHECK(hi[i] == 7.5);
    }

    // local extremum gets a zero slope
    psi = {0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0};
    linear_reconstruct(psi, dy, theta, slopes, lo, hi);
    CHECK(slopes[4] == 0.0);

    std::vector<double> tiny{1.0, 2.0};
    CHECK_THROWS_AS(linear_reconstruct(tiny, dy, theta, slopes, lo, hi), TooShort);
}

TEST_CASE("linear reconstruction is total-variation bounded on random data") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const double dy = 0.1, theta = 1.3;
    const int m = 40;
    std::vector<double> psi(m), slopes(m), lo(m - 1), hi(m - 1);
    for (int trial = 0; trial < 100; ++trial) {
        for (auto& x : psi) x = dist(rng);
        linear_reconstruct(psi, dy, theta, slopes, lo, hi);
        const double vmax = *std::max_element(psi.begin(), psi.end());
        const double vmin = *std::min_element(psi.begin(), psi.end());
        for (int i = 0; i + 1 < m; ++i) {
            CHECK(lo[i] <= vmax + 1e-14);
            CHECK(lo[i] >= vmin - 1e-14);
            CHECK(hi[i] <= vmax + 1e-14);
            CHECK(hi[i] >= vmin - 1e-14);
        }
    }
}

TEST_CASE("weno-z reproduces constants and quadratics") {
    CHECK(weno_z_value({3.0, 3.0, 3.0, 3.0, 3.0}) == doctest::Approx(3.0).epsilon(1e-15));

    // psi(y) = y^2 sampled on a uniform stencil centered at y0; the interface
    // value is (y0 + dy/2)^2
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        const double y0 = dist(rng);
        const double dy = 0.05 + 0.2 * std::abs(dist(rng));
        const double a = dist(rng), b = dist(rng), c = dist(rng);
        auto q = [&](double y) { return a * y * y + b * y + c; };
        std::array<double, 5> st;
        for (int i = 0; i < 5; ++i) st[i] = q(y0 + (i - 2) * dy);
        const double expect = q(y0 + 0.5 * dy);
        const double got = weno_z_value(st);
        CHECK(got == doctest::Approx(expect).epsilon(1e-14));
    }
}

TEST_CASE("weno-z single-spike value matches the hand evaluation") {
    // psi = (0,0,1,0,0): all three parabolas give (15/8, 3/4, 3/8), the
    // smoothness indicators are (10/3, 13/3, 10/3), tau5 = 0, so the weights
    // collapse to the linear ones and the value is 45/64.
    const double got = weno_z_value({0.0, 0.0, 1.0, 0.0, 0.0});
    CHECK(got == doctest::Approx(45.0 / 64.0).epsilon(1e-15));
}

TEST_CASE("weno-z is scale-equivariant") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<double, 5> st;
        for (auto& x : st) x = dist(rng);
        const double base = weno_z_value(st);
        std::array<double, 5> scaled;
        for (int i = 0; i < 5; ++i) scaled[i] = 2.0 * st[i];
        // scaling by a power of two is exact in the smoothness ratios
        CHECK(weno_z_value(scaled) == doctest::Approx(2.0 * base).epsilon(1e-13));
    }
}

TEST_CASE("divergence-consistent magnetic interface values") {
    // same signs: sigma_x = slope/A
    auto f = magnetic_interface_2d(2.0, 1.0, 1.0, 1.0, 0.5, 1.5, 0.2, 0.2);
    CHECK(f.sigma == doctest::Approx(0.5));
    CHECK(f.ha_east == doctest::Approx(2.0 + 0.5 * 0.2 * 0.5 * 1.0));

    // opposite signs force sigma = 0
    f = magnetic_interface_2d(2.0, 1.0, 1.0, 1.0, -0.5, 1.5, 0.2, 0.2);
    CHECK(f.sigma == 0.0);
    CHECK(f.ha_east == 2.0);
    CHECK(f.hb_north == 1.0);

    // zero averages: faces equal the averages regardless of sigma
    f = magnetic_interface_2d(2.0, 1.0, 0.0, 0.0, 0.3, -0.4, 0.2, 0.2);
    CHECK(f.ha_east == 2.0);
    CHECK(f.ha_west == 2.0);
    CHECK(f.hb_north == 1.0);
    CHECK(f.hb_south == 1.0);

    // reconstructed divergence contribution vanishes when A + B = 0
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double A = dist(rng);
        const double sx = dist(rng), sy = dist(rng);
        auto g = magnetic_interface_2d(dist(rng), dist(rng), A, -A, sx, sy, 0.2, 0.2);
        CHECK(g.sigma * (A + (-A)) == 0.0);
    }
}
