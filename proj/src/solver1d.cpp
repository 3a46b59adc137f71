#include "mrsw/solver1d.hpp"

#include <algorithm>
#include <cmath>

#include "mrsw/reconstruct.hpp"
#include "mrsw/timeint.hpp"

namespace mrsw {

namespace {

constexpr double kSpeedGapFloor = 1e-14;

double equilibrium_energy(double g, double h, double mom, double mag, double Z, double P) {
    return (mom * mom - mag * mag) / (2.0 * h * h) + g * (h + Z) + P;
}

// f_c*y + (beta/2)*y^2, the antiderivative of the Coriolis parameter
double coriolis_antideriv(const ModelConfig& cfg, double y) {
    return cfg.f_c * y + 0.5 * cfg.beta * y * y;
}

// Slopes of the linear/quadratic steady profiles of u and a. Degenerate data
// (|hv| == |hb| != 0 has no such profile) falls back to a flat extension.
struct ProfileCoefs {
    double Cu = 0.0, Ca = 0.0;
    bool degenerate = false;
};

ProfileCoefs profile_coefs(double hv, double hb) {
    ProfileCoefs c;
    const double D = hv * hv - hb * hb;
    if (std::abs(D) <= 1e-10 * (hv * hv + hb * hb)) {
        c.degenerate = (hv != 0.0 || hb != 0.0);
        return c;
    }
    c.Cu = hv * hv / D;
    c.Ca = hv * hb / D;
    return c;
}

// y-direction flux of the non-augmented system
Vec5 flux_f(double g, double h, double hu, double hv, double ha, double hb, double u, double v,
            double a, double b) {
    return {hv, hu * v - ha * b, hv * v + 0.5 * g * h * h - hb * b, ha * v - hb * u, 0.0};
}

// M(U) * dE with dE a jump of the equilibrium variables (hv, u, E, a, hb)
Vec5 m_times(double h, double hv, double hb, double u, double v, double a, const Vec5& dE) {
    return {dE[0], u * dE[0] + hv * dE[1] - hb * dE[3], v * dE[0] + h * dE[2],
            a * dE[0] - hb * dE[1] + hv * dE[3], v * dE[4]};
}

// minmod face values on a ghost-extended array; ext has n+4 entries, faces i=0..n
void minmod_faces(const std::vector<double>& ext, double dy, double theta, int n,
                  std::vector<double>& m, std::vector<double>& p) {
    for (int i = 0; i <= n; ++i) {
        const int el = i + 1, er = i + 2;
        const double sl = minmod_slope(ext[el - 1], ext[el], ext[el + 1], dy, theta);
        const double sr = minmod_slope(ext[er - 1], ext[er], ext[er + 1], dy, theta);
        m[i] = ext[el] + 0.5 * dy * sl;
        p[i] = ext[er] - 0.5 * dy * sr;
    }
}

}  // namespace

void InterfaceStates1D::resize(int ni) {
    n_iface = ni;
    for (auto* v :
         {&hv_m, &hv_p, &u_m, &u_p, &E_m, &E_p, &a_m, &a_p, &hb_m, &hb_p, &B_m, &B_p, &Z_m,
          &Z_p, &w_m, &w_p, &h_m, &h_p, &hu_m, &hu_p, &ha_m, &ha_p, &v_m, &v_p, &b_m, &b_p,
          &hhat_m, &hhat_p})
        v->resize(ni);
}

Solver1D::Solver1D(const Grid1D& grid, const ModelConfig& cfg, const Topography1D& topo,
                   double u_boundary)
    : grid_(grid), cfg_(cfg), topo_(topo), u_half_(u_boundary) {
    cfg_.validate();
}

void Solver1D::equilibrium_from_conserved(const State1D& s, Equilibrium1D& eq) const {
    const int n = grid_.n;
    eq.hv = s.hv;
    eq.hb = s.hb;
    eq.u.resize(n);
    eq.a.resize(n);
    eq.E.resize(n);
    eq.P.resize(n);
    eq.P_iface.resize(n + 1);

    for (int c = 0; c < n; ++c) {
        const double h = s.h[c];
        if (!(h > kDepthFloor)) throw DepthTooSmall("equilibrium: depth at or below floor");
        eq.u[c] = s.hu[c] / h;
        eq.a[c] = s.ha[c] / h;
    }

    // trapezoidal recursion at centers, anchored at the lower boundary
    const double f_half = coriolis_at(cfg_, grid_.iface(0));
    double f_prev = coriolis_at(cfg_, grid_.center(0));
    eq.P[0] = 0.25 * grid_.dy * (f_half * u_half_ + f_prev * eq.u[0]);
    for (int c = 1; c < n; ++c) {
        const double f_c = coriolis_at(cfg_, grid_.center(c));
        eq.P[c] = eq.P[c - 1] + 0.5 * grid_.dy * (f_prev * eq.u[c - 1] + f_c * eq.u[c]);
        f_prev = f_c;
    }

    // midpoint recursion at interfaces
    eq.P_iface[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double f_c = coriolis_at(cfg_, grid_.center(i - 1));
        eq.P_iface[i] = eq.P_iface[i - 1] + grid_.dy * f_c * eq.u[i - 1];
    }

    const auto& Z = topo_.centers();
    for (int c = 0; c < n; ++c)
        eq.E[c] = equilibrium_energy(cfg_.g, s.h[c], s.hv[c], s.hb[c], Z[c], eq.P[c]);
}

BoundaryExt1D Solver1D::outflow_ghosts(const State1D& s, const Equilibrium1D& eq) const {
    const int n = grid_.n;
    BoundaryExt1D bx;

    auto fill = [&](BoundarySide1D& side, int edge, int dir) {
        // dir = -1 extends below cell 0, dir = +1 above cell n-1
        const double y_edge = grid_.center(edge);
        const double phi_edge = coriolis_antideriv(cfg_, y_edge);
        const auto pc = profile_coefs(s.hv[edge], s.hb[edge]);
        const double Z_edge = topo_.center(edge);

        double P_prev = eq.P[edge];
        double u_prev = eq.u[edge];
        double y_prev = y_edge;
        for (int layer = 0; layer < 2; ++layer) {
            const int c = edge + dir * (layer + 1);
            const double y = grid_.center(c);
            side.y[layer] = y;
            side.hv[layer] = s.hv[edge];
            side.hb[layer] = s.hb[edge];
            side.B[layer] = s.B[edge];
            side.E[layer] = eq.E[edge];
            const double dphi = coriolis_antideriv(cfg_, y) - phi_edge;
            side.u[layer] = eq.u[edge] + pc.Cu * dphi;
            side.a[layer] = eq.a[edge] + pc.Ca * dphi;

            const double f_prev = coriolis_at(cfg_, y_prev);
            const double f_here = coriolis_at(cfg_, y);
            const double P =
                P_prev + dir * 0.5 * grid_.dy * (f_prev * u_prev + f_here * side.u[layer]);
            const double Z = topo_.at(y);
            side.Z[layer] = Z;
            double anchor = s.h[edge] + Z_edge - Z;
            if (!(anchor > kDepthFloor)) anchor = s.h[edge];
            const double c_kin = 0.5 * (s.hv[edge] * s.hv[edge] - s.hb[edge] * s.hb[edge]);
            side.h[layer] = solve_energy_cubic(
                {c_kin, cfg_.g * Z + P, eq.E[edge], cfg_.g, anchor});
            if (!(side.h[layer] > 0.0) || !std::isfinite(side.h[layer]))
                throw DepthTooSmall("outflow ghosts: non-positive depth");
            side.hu[layer] = side.h[layer] * side.u[layer];
            side.ha[layer] = side.h[layer] * side.a[layer];
            side.w[layer] = side.h[layer] + Z;

            P_prev = P;
            u_prev = side.u[layer];
            y_prev = y;
        }
        const double y_face = dir < 0 ? grid_.iface(0) : grid_.iface(n);
        const double dphi_face = coriolis_antideriv(cfg_, y_face) - phi_edge;
        side.u_face = eq.u[edge] + pc.Cu * dphi_face;
        side.a_face = eq.a[edge] + pc.Ca * dphi_face;
    };

    fill(bx.lo, 0, -1);
    fill(bx.hi, n - 1, +1);
    return bx;
}

void Solver1D::reconstruct_wb(const State1D& s, const Equilibrium1D& eq, const BoundaryExt1D& bx,
                              InterfaceStates1D& st) const {
    const int n = grid_.n;
    const double dy = grid_.dy;
    const double th = cfg_.theta;
    const auto& Z = topo_.centers();

    std::vector<double> ext(n + 4);
    auto load = [&](auto&& cell_value, const std::array<double, 2>& lo,
                    const std::array<double, 2>& hi) {
        ext[0] = lo[1];
        ext[1] = lo[0];
        for (int c = 0; c < n; ++c) ext[c + 2] = cell_value(c);
        ext[n + 2] = hi[0];
        ext[n + 3] = hi[1];
    };

    load([&](int c) { return eq.hv[c]; }, bx.lo.hv, bx.hi.hv);
    minmod_faces(ext, dy, th, n, st.hv_m, st.hv_p);
    load([&](int c) { return eq.E[c]; }, bx.lo.E, bx.hi.E);
    minmod_faces(ext, dy, th, n, st.E_m, st.E_p);
    load([&](int c) { return s.B[c]; }, bx.lo.B, bx.hi.B);
    minmod_faces(ext, dy, th, n, st.B_m, st.B_p);
    load([&](int c) { return Z[c]; }, bx.lo.Z, bx.hi.Z);
    minmod_faces(ext, dy, th, n, st.Z_m, st.Z_p);
    load([&](int c) { return s.h[c] + Z[c]; }, bx.lo.w, bx.hi.w);
    minmod_faces(ext, dy, th, n, st.w_m, st.w_p);

    // hb uses the carried derivative B as its in-cell slope, which keeps the
    // reconstruction divergence-consistent.
    {
        std::vector<double> ext_hb(n + 4), ext_B(n + 4);
        load([&](int c) { return eq.hb[c]; }, bx.lo.hb, bx.hi.hb);
        ext_hb = ext;
        load([&](int c) { return s.B[c]; }, bx.lo.B, bx.hi.B);
        ext_B = ext;
        for (int i = 0; i <= n; ++i) {
            st.hb_m[i] = ext_hb[i + 1] + 0.5 * dy * ext_B[i + 1];
            st.hb_p[i] = ext_hb[i + 2] - 0.5 * dy * ext_B[i + 2];
        }
    }

    // u and a: minmod recovers the linear steady profile when f is constant;
    // the quadratic profile of the beta-plane needs the WENO-Z interpolant.
    if (cfg_.beta == 0.0) {
        load([&](int c) { return eq.u[c]; }, bx.lo.u, bx.hi.u);
        minmod_faces(ext, dy, th, n, st.u_m, st.u_p);
        load([&](int c) { return eq.a[c]; }, bx.lo.a, bx.hi.a);
        minmod_faces(ext, dy, th, n, st.a_m, st.a_p);
    } else {
        auto weno_faces = [&](std::vector<double>& m, std::vector<double>& p, double lo_face,
                              double hi_face) {
            for (int i = 1; i <= n; ++i) {
                const int e = i + 1;
                m[i] = weno_z_value({ext[e - 2], ext[e - 1], ext[e], ext[e + 1], ext[e + 2]});
            }
            for (int i = 0; i < n; ++i) {
                const int e = i + 2;
                p[i] = weno_z_value({ext[e + 2], ext[e + 1], ext[e], ext[e - 1], ext[e - 2]});
            }
            m[0] = lo_face;
            p[n] = hi_face;
        };
        load([&](int c) { return eq.u[c]; }, bx.lo.u, bx.hi.u);
        weno_faces(st.u_m, st.u_p, bx.lo.u_face, bx.hi.u_face);
        load([&](int c) { return eq.a[c]; }, bx.lo.a, bx.hi.a);
        weno_faces(st.a_m, st.a_p, bx.lo.a_face, bx.hi.a_face);
    }

    // depths from the energy constraint, anchored at the water-surface values
    for (int i = 0; i <= n; ++i) {
        const double P = eq.P_iface[i];
        const double ck_m = 0.5 * (st.hv_m[i] * st.hv_m[i] - st.hb_m[i] * st.hb_m[i]);
        const double ck_p = 0.5 * (st.hv_p[i] * st.hv_p[i] - st.hb_p[i] * st.hb_p[i]);
        double anchor_m = st.w_m[i] - st.Z_m[i];
        double anchor_p = st.w_p[i] - st.Z_p[i];
        if (!(anchor_m > 0.0)) anchor_m = kDepthFloor;
        if (!(anchor_p > 0.0)) anchor_p = kDepthFloor;
        st.h_m[i] =
            solve_energy_cubic({ck_m, cfg_.g * st.Z_m[i] + P, st.E_m[i], cfg_.g, anchor_m});
        st.h_p[i] =
            solve_energy_cubic({ck_p, cfg_.g * st.Z_p[i] + P, st.E_p[i], cfg_.g, anchor_p});
    }
}

void Solver1D::reconstruct_nwb(const State1D& s, const Equilibrium1D& eq, const BoundaryExt1D& bx,
                               InterfaceStates1D& st) const {
    const int n = grid_.n;
    const double dy = grid_.dy;
    const double th = cfg_.theta;
    const auto& Z = topo_.centers();

    std::vector<double> ext(n + 4);
    auto load = [&](auto&& cell_value, const std::array<double, 2>& lo,
                    const std::array<double, 2>& hi) {
        ext[0] = lo[1];
        ext[1] = lo[0];
        for (int c = 0; c < n; ++c) ext[c + 2] = cell_value(c);
        ext[n + 2] = hi[0];
        ext[n + 3] = hi[1];
    };

    // componentwise minmod of the conservative variables (water surface
    // instead of depth); everything else is derived from these faces.
    load([&](int c) { return s.h[c] + Z[c]; }, bx.lo.w, bx.hi.w);
    minmod_faces(ext, dy, th, n, st.w_m, st.w_p);
    load([&](int c) { return s.hv[c]; }, bx.lo.hv, bx.hi.hv);
    minmod_faces(ext, dy, th, n, st.hv_m, st.hv_p);
    load([&](int c) { return s.hb[c]; }, bx.lo.hb, bx.hi.hb);
    minmod_faces(ext, dy, th, n, st.hb_m, st.hb_p);
    load([&](int c) { return s.B[c]; }, bx.lo.B, bx.hi.B);
    minmod_faces(ext, dy, th, n, st.B_m, st.B_p);
    load([&](int c) { return Z[c]; }, bx.lo.Z, bx.hi.Z);
    minmod_faces(ext, dy, th, n, st.Z_m, st.Z_p);

    std::vector<double> hu_m(n + 1), hu_p(n + 1), ha_m(n + 1), ha_p(n + 1);
    load([&](int c) { return s.hu[c]; }, bx.lo.hu, bx.hi.hu);
    minmod_faces(ext, dy, th, n, hu_m, hu_p);
    load([&](int c) { return s.ha[c]; }, bx.lo.ha, bx.hi.ha);
    minmod_faces(ext, dy, th, n, ha_m, ha_p);

    for (int i = 0; i <= n; ++i) {
        st.h_m[i] = st.w_m[i] - st.Z_m[i];
        st.h_p[i] = st.w_p[i] - st.Z_p[i];
        if (!(st.h_m[i] > kDepthFloor) || !(st.h_p[i] > kDepthFloor))
            throw DepthTooSmall("reconstruction: face depth at or below floor");
        st.u_m[i] = hu_m[i] / st.h_m[i];
        st.u_p[i] = hu_p[i] / st.h_p[i];
        st.a_m[i] = ha_m[i] / st.h_m[i];
        st.a_p[i] = ha_p[i] / st.h_p[i];
        const double P = eq.P_iface[i];
        st.E_m[i] = equilibrium_energy(cfg_.g, st.h_m[i], st.hv_m[i], st.hb_m[i], st.Z_m[i], P);
        st.E_p[i] = equilibrium_energy(cfg_.g, st.h_p[i], st.hv_p[i], st.hb_p[i], st.Z_p[i], P);
    }
}

void Solver1D::interface_reconstruction(const State1D& s, const Equilibrium1D& eq,
                                        const BoundaryExt1D& bx, InterfaceStates1D& st) const {
    const int n = grid_.n;
    st.resize(n + 1);
    if (cfg_.variant == SchemeVariant::WB)
        reconstruct_wb(s, eq, bx, st);
    else
        reconstruct_nwb(s, eq, bx, st);

    for (int i = 0; i <= n; ++i) {
        if (!(st.h_m[i] > 0.0) || !(st.h_p[i] > 0.0) || !std::isfinite(st.h_m[i]) ||
            !std::isfinite(st.h_p[i]))
            throw DepthTooSmall("reconstruction: non-positive face depth");
        st.hu_m[i] = st.h_m[i] * st.u_m[i];
        st.hu_p[i] = st.h_p[i] * st.u_p[i];
        st.ha_m[i] = st.h_m[i] * st.a_m[i];
        st.ha_p[i] = st.h_p[i] * st.a_p[i];
        st.v_m[i] = st.hv_m[i] / st.h_m[i];
        st.v_p[i] = st.hv_p[i] / st.h_p[i];
        st.b_m[i] = st.hb_m[i] / st.h_m[i];
        st.b_p[i] = st.hb_p[i] / st.h_p[i];
    }
}

void Solver1D::hat_states(InterfaceStates1D& st, const Equilibrium1D& eq) const {
    const int n = grid_.n;
    for (int i = 0; i <= n; ++i) {
        if (st.Z_m[i] == st.Z_p[i]) {
            st.hhat_m[i] = st.h_m[i];
            st.hhat_p[i] = st.h_p[i];
            continue;
        }
        const double Zi = 0.5 * (st.Z_m[i] + st.Z_p[i]);
        const double P = eq.P_iface[i];
        const double ck_m = 0.5 * (st.hv_m[i] * st.hv_m[i] - st.hb_m[i] * st.hb_m[i]);
        const double ck_p = 0.5 * (st.hv_p[i] * st.hv_p[i] - st.hb_p[i] * st.hb_p[i]);
        double anchor_m = st.w_m[i] - st.Z_m[i];
        double anchor_p = st.w_p[i] - st.Z_p[i];
        if (!(anchor_m > 0.0)) anchor_m = st.h_m[i];
        if (!(anchor_p > 0.0)) anchor_p = st.h_p[i];
        st.hhat_m[i] = solve_energy_cubic({ck_m, cfg_.g * Zi + P, st.E_m[i], cfg_.g, anchor_m});
        st.hhat_p[i] = solve_energy_cubic({ck_p, cfg_.g * Zi + P, st.E_p[i], cfg_.g, anchor_p});
    }
}

void Solver1D::global_flux_ledger(const InterfaceStates1D& st, const State1D& s,
                                  FluxLedger1D& led) const {
    const int n = grid_.n;
    led.R_m.resize(n + 1);
    led.R_p.resize(n + 1);

    auto face_flux = [&](int i, bool minus) {
        return minus ? flux_f(cfg_.g, st.h_m[i], st.hu_m[i], st.hv_m[i], st.ha_m[i], st.hb_m[i],
                              st.u_m[i], st.v_m[i], st.a_m[i], st.b_m[i])
                     : flux_f(cfg_.g, st.h_p[i], st.hu_p[i], st.hv_p[i], st.ha_p[i], st.hb_p[i],
                              st.u_p[i], st.v_p[i], st.a_p[i], st.b_p[i]);
    };
    auto m_apply = [&](int i, bool minus, const Vec5& dE) {
        return minus ? m_times(st.h_m[i], st.hv_m[i], st.hb_m[i], st.u_m[i], st.v_m[i],
                               st.a_m[i], dE)
                     : m_times(st.h_p[i], st.hv_p[i], st.hb_p[i], st.u_p[i], st.v_p[i],
                               st.a_p[i], dE);
    };

    // jump term along the interface path
    auto q_psi = [&](int i) {
        const Vec5 dE{st.hv_p[i] - st.hv_m[i], st.u_p[i] - st.u_m[i], st.E_p[i] - st.E_m[i],
                      st.a_p[i] - st.a_m[i], st.hb_p[i] - st.hb_m[i]};
        const Vec5 Fp = face_flux(i, false), Fm = face_flux(i, true);
        const Vec5 Mp = m_apply(i, false, dE), Mm = m_apply(i, true, dE);
        Vec5 q;
        for (int c = 0; c < 5; ++c) q[c] = Fp[c] - Fm[c] - 0.5 * (Mp[c] + Mm[c]);
        return q;
    };
    // in-cell quadrature for cell k (paper index), faces i=k (right) and k-1 (left)
    auto q_cell = [&](int k) {
        const int ir = k, il = k - 1;
        const Vec5 dE{st.hv_m[ir] - st.hv_p[il], st.u_m[ir] - st.u_p[il],
                      st.E_m[ir] - st.E_p[il], st.a_m[ir] - st.a_p[il],
                      st.hb_m[ir] - st.hb_p[il]};
        const Vec5 Fr = face_flux(ir, true), Fl = face_flux(il, false);
        const Vec5 Mr = m_apply(ir, true, dE), Ml = m_apply(il, false, dE);
        Vec5 q;
        for (int c = 0; c < 5; ++c) q[c] = Fr[c] - Fl[c] - 0.5 * (Mr[c] + Ml[c]);
        q[1] += grid_.dy * coriolis_at(cfg_, grid_.center(k - 1)) * s.hv[k - 1];
        return q;
    };

    led.R_m[0] = {0.0, 0.0, 0.0, 0.0, 0.0};
    {
        const Vec5 q = q_psi(0);
        for (int c = 0; c < 5; ++c) led.R_p[0][c] = led.R_m[0][c] + q[c];
    }
    for (int k = 1; k <= n; ++k) {
        const Vec5 qc = q_cell(k);
        for (int c = 0; c < 5; ++c) led.R_m[k][c] = led.R_p[k - 1][c] + qc[c];
        const Vec5 qp = q_psi(k);
        for (int c = 0; c < 5; ++c) led.R_p[k][c] = led.R_m[k][c] + qp[c];
    }
}

void Solver1D::local_speeds(const InterfaceStates1D& st, std::vector<double>& sp,
                            std::vector<double>& sm) const {
    const int ni = st.n_iface;
    sp.resize(ni);
    sm.resize(ni);
    for (int i = 0; i < ni; ++i) {
        const double cm = std::sqrt(st.b_m[i] * st.b_m[i] + cfg_.g * st.h_m[i]);
        const double cp = std::sqrt(st.b_p[i] * st.b_p[i] + cfg_.g * st.h_p[i]);
        sp[i] = std::max({st.v_m[i] + cm, st.v_p[i] + cp, 0.0});
        sm[i] = std::min({st.v_m[i] - cm, st.v_p[i] - cp, 0.0});
    }
}

void Solver1D::cu_flux(const InterfaceStates1D& st, const FluxLedger1D& led,
                       const std::vector<double>& sp, const std::vector<double>& sm,
                       std::vector<Vec6>& flux) const {
    const int ni = st.n_iface;
    flux.resize(ni);
    for (int i = 0; i < ni; ++i) {
        const Vec5 Fm = flux_f(cfg_.g, st.h_m[i], st.hu_m[i], st.hv_m[i], st.ha_m[i],
                               st.hb_m[i], st.u_m[i], st.v_m[i], st.a_m[i], st.b_m[i]);
        const Vec5 Fp = flux_f(cfg_.g, st.h_p[i], st.hu_p[i], st.hv_p[i], st.ha_p[i],
                               st.hb_p[i], st.u_p[i], st.v_p[i], st.a_p[i], st.b_p[i]);
        Vec6 Hm, Hp;
        for (int c = 0; c < 5; ++c) {
            Hm[c] = Fm[c] - led.R_m[i][c];
            Hp[c] = Fp[c] - led.R_p[i][c];
        }
        Hm[5] = st.v_m[i] * st.B_m[i];
        Hp[5] = st.v_p[i] * st.B_p[i];

        const double gap = sp[i] - sm[i];
        if (gap < kSpeedGapFloor) {
            for (int c = 0; c < 6; ++c) flux[i][c] = 0.5 * (Hm[c] + Hp[c]);
            continue;
        }
        const Vec6 what_m{st.hhat_m[i],
                          st.hhat_m[i] * st.u_m[i],
                          st.hv_m[i],
                          st.hhat_m[i] * st.a_m[i],
                          st.hb_m[i],
                          st.B_m[i]};
        const Vec6 what_p{st.hhat_p[i],
                          st.hhat_p[i] * st.u_p[i],
                          st.hv_p[i],
                          st.hhat_p[i] * st.a_p[i],
                          st.hb_p[i],
                          st.B_p[i]};
        const double coef = sp[i] * sm[i] / gap;
        for (int c = 0; c < 6; ++c)
            flux[i][c] =
                (sp[i] * Hm[c] - sm[i] * Hp[c]) / gap + coef * (what_p[c] - what_m[c]);
    }
}

double Solver1D::rhs(const State1D& s, State1D& dwdt) {
    const int n = grid_.n;
    if (dwdt.n != n) dwdt = State1D(n);

    equilibrium_from_conserved(s, eq_);
    const BoundaryExt1D bx = outflow_ghosts(s, eq_);
    interface_reconstruction(s, eq_, bx, st_);
    hat_states(st_, eq_);
    global_flux_ledger(st_, s, led_);
    local_speeds(st_, sp_, sm_);
    cu_flux(st_, led_, sp_, sm_, flux_);

    const double inv_dy = 1.0 / grid_.dy;
    auto arrays = dwdt.arrays();
    for (int c = 0; c < n; ++c)
        for (int f = 0; f < 6; ++f)
            (*arrays[f])[c] = -(flux_[c + 1][f] - flux_[c][f]) * inv_dy;

    double smax = 0.0;
    for (int i = 0; i <= n; ++i) smax = std::max({smax, sp_[i], -sm_[i]});
    return smax;
}

double Solver1D::stable_dt(double max_speed) const {
    return max_dt(max_speed, grid_.dy, cfg_.cfl);
}

double Solver1D::steady_u_boundary(const SteadyTargets& t) const {
    const auto pc = profile_coefs(t.hv_eq, t.hb_eq);
    if (pc.degenerate) throw DegenerateEquilibrium("steady state: |hv| == |hb| != 0");
    return t.u_c + pc.Cu * coriolis_antideriv(cfg_, grid_.iface(0));
}

State1D Solver1D::steady_state_discrete(const SteadyTargets& t) const {
    const auto pc = profile_coefs(t.hv_eq, t.hb_eq);
    if (pc.degenerate) throw DegenerateEquilibrium("steady state: |hv| == |hb| != 0");

    const int n = grid_.n;
    State1D s(n);
    std::vector<double> u(n), a(n), P(n);
    for (int c = 0; c < n; ++c) {
        const double phi = coriolis_antideriv(cfg_, grid_.center(c));
        u[c] = t.u_c + pc.Cu * phi;
        a[c] = t.a_c + pc.Ca * phi;
    }
    const double u_half = steady_u_boundary(t);
    const double f_half = coriolis_at(cfg_, grid_.iface(0));
    P[0] = 0.25 * grid_.dy * (f_half * u_half + coriolis_at(cfg_, grid_.center(0)) * u[0]);
    for (int c = 1; c < n; ++c)
        P[c] = P[c - 1] + 0.5 * grid_.dy *
                              (coriolis_at(cfg_, grid_.center(c - 1)) * u[c - 1] +
                               coriolis_at(cfg_, grid_.center(c)) * u[c]);

    const double c_kin = 0.5 * (t.hv_eq * t.hv_eq - t.hb_eq * t.hb_eq);
    double anchor = 1.0;
    {
        const double lake = (t.E_eq - cfg_.g * topo_.center(0) - P[0]) / cfg_.g;
        if (lake > 0.0) anchor = lake;
    }
    for (int c = 0; c < n; ++c) {
        const double Z = topo_.center(c);
        const double h =
            solve_energy_cubic({c_kin, cfg_.g * Z + P[c], t.E_eq, cfg_.g, anchor});
        if (!(h > kDepthFloor))
            throw DegenerateEquilibrium("steady state: no positive depth");
        s.h[c] = h;
        s.hu[c] = h * u[c];
        s.hv[c] = t.hv_eq;
        s.ha[c] = h * a[c];
        s.hb[c] = t.hb_eq;
        s.B[c] = 0.0;
        anchor = h;
    }
    return s;
}

}  // namespace mrsw
