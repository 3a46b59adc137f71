#pragma once

#include <array>
#include <span>
#include <vector>

#include "mrsw/errors.hpp"

namespace mrsw {

// min of all entries if all positive, max if all negative, 0 on mixed signs.
double minmod(std::span<const double> values);

inline double minmod3(double c1, double c2, double c3) {
    const std::array<double, 3> v{c1, c2, c3};
    return minmod(v);
}

// Generalized minmod slope for one cell from its three-point neighborhood.
inline double minmod_slope(double psi_m, double psi_0, double psi_p, double dx, double theta) {
    return minmod3(theta * (psi_0 - psi_m) / dx, (psi_p - psi_m) / (2.0 * dx),
                   theta * (psi_p - psi_0) / dx);
}

// Slope-limited piecewise linear reconstruction on an already ghost-extended
// array: slopes for the interior entries (first and last slope are 0), plus
// one-sided interface values psi_minus[i] (from the left cell) and
// psi_plus[i] (from the right cell) at the m-1 interior interfaces.
void linear_reconstruct(std::span<const double> psi, double dx, double theta,
                        std::span<double> slopes, std::span<double> psi_minus,
                        std::span<double> psi_plus);

struct WenoZConfig {
    double d0 = 1.0 / 16.0;
    double d1 = 5.0 / 8.0;
    double d2 = 5.0 / 16.0;
    double eps = 1e-12;
    int r = 2;
};

// Fifth-order WENO-Z interpolation of point values: returns the left-sided
// interface value psi^-_{k+1/2} from the stencil (psi_{k-2},...,psi_{k+2}).
// Feed the reversed stencil to get the mirror-symmetric right-sided value.
double weno_z_value(const std::array<double, 5>& psi, const WenoZConfig& cfg = {});

struct MagneticFaces2D {
    double ha_east, ha_west;  // x-faces of ha
    double hb_north, hb_south;
    double sigma;
};

// Divergence-consistent interface values for the magnetic cell averages: the
// minmod slopes of ha (in x) and hb (in y) are replaced by sigma*A and
// sigma*B so that the per-cell reconstructed divergence is sigma*(A+B).
MagneticFaces2D magnetic_interface_2d(double ha_bar, double hb_bar, double A_bar, double B_bar,
                                      double slope_ha_x, double slope_hb_y, double dx, double dy);

}  // namespace mrsw
