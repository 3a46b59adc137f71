#pragma once

#include "mrsw/errors.hpp"

namespace mrsw {

// Coefficients of the interface-depth constraint
//   c_kin / h^2 + g*h + z_eff = E_tgt,
// with c_kin = (momentum^2 - magnetic^2)/2 and z_eff = g*Z + P. h_guess is the
// water-surface-based anchor used for root selection and as the fallback when
// no positive root exists.
struct EnergyCubic {
    double c_kin = 0.0;
    double z_eff = 0.0;
    double E_tgt = 0.0;
    double g = 1.0;
    double h_guess = 1.0;
};

// Exact solution of the cubic g*h^3 + (z_eff - E_tgt)*h^2 + c_kin = 0.
// Returns the positive root closest to h_guess (ties break toward the larger
// root); returns h_guess itself when no positive root exists.
double solve_energy_cubic(const EnergyCubic& c);

}  // namespace mrsw
