#include "mrsw/reconstruct.hpp"

#include <algorithm>
#include <cmath>

namespace mrsw {

double minmod(std::span<const double> values) {
    if (values.empty()) throw EmptyInput("minmod: no arguments");
    bool all_pos = true, all_neg = true;
    for (double v : values) {
        all_pos = all_pos && (v > 0.0);
        all_neg = all_neg && (v < 0.0);
    }
    if (all_pos) return *std::min_element(values.begin(), values.end());
    if (all_neg) return *std::max_element(values.begin(), values.end());
    return 0.0;
}

void linear_reconstruct(std::span<const double> psi, double dx, double theta,
                        std::span<double> slopes, std::span<double> psi_minus,
                        std::span<double> psi_plus) {
    const std::size_t m = psi.size();
    if (m < 3) throw TooShort("linear_reconstruct: need at least 3 values");
    slopes[0] = 0.0;
    slopes[m - 1] = 0.0;
    for (std::size_t c = 1; c + 1 < m; ++c)
        slopes[c] = minmod_slope(psi[c - 1], psi[c], psi[c + 1], dx, theta);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        psi_minus[i] = psi[i] + 0.5 * dx * slopes[i];
        psi_plus[i] = psi[i + 1] - 0.5 * dx * slopes[i + 1];
    }
}

double weno_z_value(const std::array<double, 5>& psi, const WenoZConfig& cfg) {
    const double pm2 = psi[0], pm1 = psi[1], p0 = psi[2], pp1 = psi[3], pp2 = psi[4];

    // parabola values at the right face of the center cell
    const double q0 = 0.375 * pm2 - 1.25 * pm1 + 1.875 * p0;
    const double q1 = -0.125 * pm1 + 0.75 * p0 + 0.375 * pp1;
    const double q2 = 0.375 * p0 + 0.75 * pp1 - 0.125 * pp2;

    const double c13 = 13.0 / 12.0;
    const double b0 = c13 * std::pow(pm2 - 2.0 * pm1 + p0, 2) +
                      0.25 * std::pow(pm2 - 4.0 * pm1 + 3.0 * p0, 2);
    const double b1 =
        c13 * std::pow(pm1 - 2.0 * p0 + pp1, 2) + 0.25 * std::pow(pm1 - pp1, 2);
    const double b2 = c13 * std::pow(p0 - 2.0 * pp1 + pp2, 2) +
                      0.25 * std::pow(3.0 * p0 - 4.0 * pp1 + pp2, 2);
    const double tau5 = std::abs(b2 - b0);

    auto alpha = [&](double d, double b) {
        double ratio = tau5 / (b + cfg.eps);
        double w = 1.0;
        for (int i = 0; i < cfg.r; ++i) w *= ratio;
        return d * (1.0 + w);
    };
    const double a0 = alpha(cfg.d0, b0);
    const double a1 = alpha(cfg.d1, b1);
    const double a2 = alpha(cfg.d2, b2);
    const double asum = a0 + a1 + a2;
    return (a0 * q0 + a1 * q1 + a2 * q2) / asum;
}

MagneticFaces2D magnetic_interface_2d(double ha_bar, double hb_bar, double A_bar, double B_bar,
                                      double slope_ha_x, double slope_hb_y, double dx, double dy) {
    double sx = 0.0, sy = 0.0;
    if (slope_ha_x * A_bar > 0.0) sx = std::min(1.0, slope_ha_x / A_bar);
    if (slope_hb_y * B_bar > 0.0) sy = std::min(1.0, slope_hb_y / B_bar);
    const double sigma = std::min({1.0, sx, sy});
    MagneticFaces2D f;
    f.sigma = sigma;
    f.ha_east = ha_bar + 0.5 * dx * sigma * A_bar;
    f.ha_west = ha_bar - 0.5 * dx * sigma * A_bar;
    f.hb_north = hb_bar + 0.5 * dy * sigma * B_bar;
    f.hb_south = hb_bar - 0.5 * dy * sigma * B_bar;
    return f;
}

}  // namespace mrsw
