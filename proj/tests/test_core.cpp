#include <cmath>
#include <random>

#include "doctest.h"
#include "mrsw/state.hpp"
#include "mrsw/topography.hpp"
#include "mrsw/types.hpp"

using namespace mrsw;

TEST_CASE("coriolis parameter is affine in y") {
    ModelConfig cfg;
    cfg.f_c = 1.0;
    cfg.beta = 0.0;
    CHECK(coriolis_at(cfg, 3.0) == 1.0);

    cfg.f_c = 0.0;
    cfg.beta = 0.1;
    CHECK(coriolis_at(cfg, 2.0) == doctest::Approx(0.2).epsilon(1e-15));

    cfg.beta = 0.0;
    CHECK(coriolis_at(cfg, -17.5) == 0.0);

    // f(y1) + f(y2) == f(y1+y2) + f(0)
    cfg.f_c = 0.7;
    cfg.beta = -0.03;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double y1 = dist(rng), y2 = dist(rng);
        const double lhs = coriolis_at(cfg, y1) + coriolis_at(cfg, y2);
        const double rhs = coriolis_at(cfg, y1 + y2) + coriolis_at(cfg, 0.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(4e-16));
    }
}

TEST_CASE("primitives from conserved") {
    auto p = primitives_from_conserved(1.0, 0.5, 0.0, 3.0, 0.0);
    CHECK(p.u == 0.5);
    CHECK(p.a == 3.0);

    p = primitives_from_conserved(2.0, 1.0, 4.0, 0.0, 6.0);
    CHECK(p.u == 0.5);
    CHECK(p.v == 2.0);
    CHECK(p.a == 0.0);
    CHECK(p.b == 3.0);

    CHECK_THROWS_AS(primitives_from_conserved(1e-13, 1.0, 0.0, 0.0, 0.0), DepthTooSmall);
}

TEST_CASE("primitives round-trip across depth scales") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> vel(-5.0, 5.0);
    for (double h : {1e-12 * 1.0001, 1e-6, 1.0, 42.0, 1e6}) {
        for (int i = 0; i < 50; ++i) {
            const double u = vel(rng), v = vel(rng), a = vel(rng), b = vel(rng);
            auto p = primitives_from_conserved(h, h * u, h * v, h * a, h * b);
            CHECK(p.u == doctest::Approx(u).epsilon(4e-16));
            CHECK(p.v == doctest::Approx(v).epsilon(4e-16));
            CHECK(p.a == doctest::Approx(a).epsilon(4e-16));
            CHECK(p.b == doctest::Approx(b).epsilon(4e-16));
        }
    }
}

TEST_CASE("grid construction and invariants") {
    Grid1D g(100, -10.0, 10.0);
    CHECK(g.dy == doctest::Approx(0.2));
    CHECK(g.center(0) == doctest::Approx(-9.9));
    CHECK(g.iface(0) == -10.0);
    CHECK(g.iface(100) == doctest::Approx(10.0));
    CHECK_THROWS_AS(Grid1D(4, 0.0, 1.0), ConfigInvalid);
    CHECK_THROWS_AS(Grid2D(4, 10, 0, 1, 0, 1), ConfigInvalid);

    ModelConfig bad;
    bad.theta = 2.5;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
    bad = ModelConfig{};
    bad.cfl = 0.7;
    CHECK_THROWS_AS(bad.validate(), ConfigInvalid);
}

TEST_CASE("topography profiles") {
    Grid1D g(100, -10.0, 10.0);

    TopoDesc flat;
    Topography1D tf(flat, g);
    for (double z : tf.centers()) CHECK(z == 0.0);

    TopoDesc gauss{TopoKind::GaussianY, 0.5, 0.0, 1.0, {}};
    Topography1D tg(gauss, g);
    CHECK(tg.at(0.0) == 0.5);
    CHECK(tg.at(2.0) == doctest::Approx(0.5 * std::exp(-4.0)).epsilon(1e-15));

    Grid2D g2(16, 16, -10, 10, -10, 10);
    TopoDesc rad{TopoKind::GaussianRadial, 0.05, 0.0, 1.0, {}};
    Topography2D tr(rad, g2);
    CHECK(tr.at(0.0, 0.0) == 0.05);
    CHECK(tr.at(3.0, 4.0) == doctest::Approx(0.05 * std::exp(-25.0)).epsilon(1e-12));

    TopoDesc bad;
    bad.kind = TopoKind::GaussianRadial;
    CHECK_THROWS_AS(Topography1D(bad, g), UnknownDescriptor);

    TopoDesc tab;
    tab.kind = TopoKind::Tabulated;
    tab.table.assign(100, 0.25);
    Topography1D tt(tab, g);
    CHECK(tt.at(0.123) == doctest::Approx(0.25));
}
