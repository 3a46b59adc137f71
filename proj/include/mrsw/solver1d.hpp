#pragma once

#include <array>
#include <vector>

#include "mrsw/cubic.hpp"
#include "mrsw/state.hpp"
#include "mrsw/topography.hpp"
#include "mrsw/types.hpp"

namespace mrsw {

using Vec5 = std::array<double, 5>;
using Vec6 = std::array<double, 6>;

// Discrete equilibrium variables (hv, u, E, a, hb) and the global Coriolis
// integrals P at cell centers (trapezoidal) and interfaces (midpoint).
struct Equilibrium1D {
    std::vector<double> hv, u, E, a, hb;  // size n
    std::vector<double> P;                // size n
    std::vector<double> P_iface;          // size n+1, P_iface[0] = 0
};

// Outflow boundary extension: two ghost cells per side built by extrapolating
// the equilibrium variables. Layer 0 is adjacent to the domain, layer 1 is the
// outer one. u_face/a_face are the profile values at the boundary interface
// itself, used where the reconstruction stencil cannot reach.
struct BoundarySide1D {
    std::array<double, 2> y{}, h{}, hu{}, hv{}, ha{}, hb{}, B{}, u{}, a{}, E{}, w{}, Z{};
    double u_face = 0.0, a_face = 0.0;
};
struct BoundaryExt1D {
    BoundarySide1D lo, hi;
};

// One-sided point values at the n+1 interfaces; index i lies between cells
// c=i-1 and c=i. "m" is the value from the left (minus side), "p" from the
// right. hhat is the modified depth entering only the numerical diffusion.
struct InterfaceStates1D {
    int n_iface = 0;
    std::vector<double> hv_m, hv_p, u_m, u_p, E_m, E_p, a_m, a_p, hb_m, hb_p;
    std::vector<double> B_m, B_p, Z_m, Z_p, w_m, w_p;
    std::vector<double> h_m, h_p, hu_m, hu_p, ha_m, ha_p, v_m, v_p, b_m, b_p;
    std::vector<double> hhat_m, hhat_p;
    void resize(int ni);
};

// Recursively accumulated global integrals R at both sides of each interface.
struct FluxLedger1D {
    std::vector<Vec5> R_m, R_p;
};

class Solver1D {
  public:
    Solver1D(const Grid1D& grid, const ModelConfig& cfg, const Topography1D& topo,
             double u_boundary);

    // pipeline stages, exposed for testing
    void equilibrium_from_conserved(const State1D& s, Equilibrium1D& eq) const;
    BoundaryExt1D outflow_ghosts(const State1D& s, const Equilibrium1D& eq) const;
    void interface_reconstruction(const State1D& s, const Equilibrium1D& eq,
                                  const BoundaryExt1D& bx, InterfaceStates1D& st) const;
    void hat_states(InterfaceStates1D& st, const Equilibrium1D& eq) const;
    void global_flux_ledger(const InterfaceStates1D& st, const State1D& s,
                            FluxLedger1D& led) const;
    void local_speeds(const InterfaceStates1D& st, std::vector<double>& sp,
                      std::vector<double>& sm) const;
    void cu_flux(const InterfaceStates1D& st, const FluxLedger1D& led,
                 const std::vector<double>& sp, const std::vector<double>& sm,
                 std::vector<Vec6>& flux) const;

    // Full semi-discrete right-hand side; returns the largest one-sided speed
    // (for the CFL step control). Keeps the interface fluxes accessible.
    double rhs(const State1D& s, State1D& dwdt);
    const std::vector<Vec6>& last_flux() const { return flux_; }
    double stable_dt(double max_speed) const;

    struct SteadyTargets {
        double hv_eq = 0.0, E_eq = 0.0, hb_eq = 0.0, u_c = 0.0, a_c = 0.0;
    };
    State1D steady_state_discrete(const SteadyTargets& t) const;
    double steady_u_boundary(const SteadyTargets& t) const;

    const Grid1D& grid() const { return grid_; }
    const ModelConfig& config() const { return cfg_; }
    const Topography1D& topography() const { return topo_; }
    double u_boundary() const { return u_half_; }

  private:
    void reconstruct_wb(const State1D& s, const Equilibrium1D& eq, const BoundaryExt1D& bx,
                        InterfaceStates1D& st) const;
    void reconstruct_nwb(const State1D& s, const Equilibrium1D& eq, const BoundaryExt1D& bx,
                         InterfaceStates1D& st) const;

    Grid1D grid_;
    ModelConfig cfg_;
    Topography1D topo_;
    double u_half_;  // boundary value of u at y_lo entering the P recursion

    // workspace reused across rhs() calls
    Equilibrium1D eq_;
    InterfaceStates1D st_;
    FluxLedger1D led_;
    std::vector<double> sp_, sm_;
    std::vector<Vec6> flux_;
};

}  // namespace mrsw
