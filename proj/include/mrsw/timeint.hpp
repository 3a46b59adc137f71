#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "mrsw/state.hpp"

namespace mrsw {

// CFL step from the largest one-sided speed. A quiescent state falls back to
// one cell per step.
inline double max_dt(double max_speed, double dy, double cfl) {
    if (!(max_speed > 0.0)) return cfl * dy;
    return cfl * dy / max_speed;
}

inline double max_dt(double max_speed_x, double max_speed_y, double dx, double dy, double cfl) {
    const double dtx =
        max_speed_x > 0.0 ? dx / max_speed_x : std::numeric_limits<double>::infinity();
    const double dty =
        max_speed_y > 0.0 ? dy / max_speed_y : std::numeric_limits<double>::infinity();
    const double dt = cfl * std::min(dtx, dty);
    if (!std::isfinite(dt)) return cfl * std::min(dx, dy);
    return dt;
}

// Three-stage third-order strong-stability-preserving Runge-Kutta step:
//   w1     = w + dt L(w)
//   w2     = 3/4 w + 1/4 (w1 + dt L(w1))
//   w_next = 1/3 w + 2/3 (w2 + dt L(w2))
// The first tendency is passed in so the caller can reuse the evaluation that
// produced the CFL speeds. StateT needs lincomb() and all_finite() overloads.
template <class StateT, class RhsFn>
void ssp_rk3_step(const StateT& w, RhsFn&& rhs, const StateT& dw0, double dt, StateT& stage,
                  StateT& dw, StateT& w_next) {
    lincomb(stage, 1.0, w, dt, dw0);
    if (!all_finite(stage)) throw NonFiniteState("ssp_rk3: stage 1 not finite");

    rhs(stage, dw);
    lincomb(stage, 1.0, stage, dt, dw);
    lincomb(stage, 0.75, w, 0.25, stage);
    if (!all_finite(stage)) throw NonFiniteState("ssp_rk3: stage 2 not finite");

    rhs(stage, dw);
    lincomb(stage, 1.0, stage, dt, dw);
    lincomb(w_next, 1.0 / 3.0, w, 2.0 / 3.0, stage);
    if (!all_finite(w_next)) throw NonFiniteState("ssp_rk3: result not finite");
}

template <class StateT, class RhsFn>
void ssp_rk3_step(const StateT& w, RhsFn&& rhs, double dt, StateT& w_next) {
    StateT dw0 = w, stage = w, dw = w;
    rhs(w, dw0);
    ssp_rk3_step(w, rhs, dw0, dt, stage, dw, w_next);
}

// scalar-array overloads so the stepper applies to plain vectors in tests
inline void lincomb(std::vector<double>& out, double ca, const std::vector<double>& x, double cb,
                    const std::vector<double>& y) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = ca * x[i] + cb * y[i];
}
inline bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

struct TimeState {
    double t = 0.0;
    double dt_last = 0.0;
    long step_count = 0;
};

// Drives a semi-discrete solver to t_end; the step comes from the speeds of
// the first stage only, and the final step is clamped to land on t_end
// exactly. The solver supplies rhs(state, dwdt) returning speed info and
// stable_dt(info). on_step(ts) runs after every accepted step.
template <class StateT, class Solver>
void integrate_to(Solver& solver, StateT& w, double t_end, TimeState& ts,
                  const std::function<void(const TimeState&)>& on_step = {}) {
    StateT dw0 = w, stage = w, dw = w, w_next = w;
    auto rhs = [&](const StateT& s, StateT& out) { solver.rhs(s, out); };
    while (ts.t < t_end) {
        const auto speeds = solver.rhs(w, dw0);
        double dt = solver.stable_dt(speeds);
        if (ts.t + dt >= t_end) dt = t_end - ts.t;
        ssp_rk3_step(w, rhs, dw0, dt, stage, dw, w_next);
        std::swap(w, w_next);
        ts.t += dt;
        ts.dt_last = dt;
        ++ts.step_count;
        if (on_step) on_step(ts);
    }
}

}  // namespace mrsw
