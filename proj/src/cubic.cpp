#include "mrsw/cubic.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace mrsw {

namespace {

// One step of Newton on f(h) = g*h^3 + a2*h^2 + a0, guarded against a flat
// derivative and against leaving the positive axis.
double polish(double h, double g, double a2, double a0) {
    for (int it = 0; it < 2; ++it) {
        const double f = ((g * h + a2) * h) * h + a0;
        const double df = (3.0 * g * h + 2.0 * a2) * h;
        if (df == 0.0) break;
        const double h_new = h - f / df;
        if (!(h_new > 0.0) || !std::isfinite(h_new)) break;
        h = h_new;
    }
    return h;
}

}  // namespace

double solve_energy_cubic(const EnergyCubic& c) {
    if (!std::isfinite(c.c_kin) || !std::isfinite(c.z_eff) || !std::isfinite(c.E_tgt) ||
        !std::isfinite(c.g) || !std::isfinite(c.h_guess))
        throw NonFinite("solve_energy_cubic: non-finite coefficient");

    const double g = c.g;
    const double a2 = c.z_eff - c.E_tgt;
    const double a0 = c.c_kin;

    // c_kin == 0 degenerates to the linear water-surface relation (plus a
    // double root at h=0, which is never positive).
    if (a0 == 0.0) {
        const double h = -a2 / g;
        return h > 0.0 ? h : c.h_guess;
    }

    // Depressed form t^3 + p t + q with h = t - b/3, b = a2/g. Since the
    // linear coefficient of the original cubic vanishes, p = -b^2/3 <= 0.
    const double b = a2 / g;
    const double p = -b * b / 3.0;
    const double q = (2.0 * b * b * b / 27.0) + a0 / g;

    std::array<double, 3> roots{};
    int n_roots = 0;
    if (p == 0.0) {
        roots[n_roots++] = std::cbrt(-q);
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = 3.0 * q / (p * m);
        if (std::abs(arg) <= 1.0) {
            const double phi = std::acos(arg) / 3.0;
            const double two_pi_3 = 2.0943951023931953;
            roots[n_roots++] = m * std::cos(phi);
            roots[n_roots++] = m * std::cos(phi - two_pi_3);
            roots[n_roots++] = m * std::cos(phi + two_pi_3);
        } else {
            // single real root, hyperbolic branch
            const double s = q > 0.0 ? 1.0 : -1.0;
            const double t = std::acosh(std::abs(arg)) / 3.0;
            roots[n_roots++] = -s * m * std::cosh(t);
        }
    }

    double best = -1.0;
    double best_dist = 0.0;
    for (int i = 0; i < n_roots; ++i) {
        double h = roots[i] - b / 3.0;
        if (!(h > 0.0)) continue;
        h = polish(h, g, a2, a0);
        if (!(h > 0.0) || !std::isfinite(h)) continue;
        const double dist = std::abs(h - c.h_guess);
        if (best < 0.0 || dist < best_dist || (dist == best_dist && h > best)) {
            best = h;
            best_dist = dist;
        }
    }
    return best > 0.0 ? best : c.h_guess;
}

}  // namespace mrsw
