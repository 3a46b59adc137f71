#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "mrsw/types.hpp"

namespace mrsw {

struct Primitives {
    double h, u, v, a, b;
};

// (h, hu, hv, ha, hb) -> (h, u, v, a, b); rejects near-dry depths.
inline Primitives primitives_from_conserved(double h, double hu, double hv, double ha, double hb) {
    if (!(h > kDepthFloor)) throw DepthTooSmall("depth at or below floor");
    return {h, hu / h, hv / h, ha / h, hb / h};
}

// Cell-averaged state of the augmented 1-D system. B is the spatial derivative
// of hb carried as an extra evolved quantity.
struct State1D {
    int n = 0;
    std::vector<double> h, hu, hv, ha, hb, B;

    State1D() = default;
    explicit State1D(int n_) : n(n_), h(n_), hu(n_), hv(n_), ha(n_), hb(n_), B(n_) {}

    std::array<std::vector<double>*, 6> arrays() { return {&h, &hu, &hv, &ha, &hb, &B}; }
    std::array<const std::vector<double>*, 6> arrays() const {
        return {&h, &hu, &hv, &ha, &hb, &B};
    }
};

// 2-D analog; A and B carry the x- and y-derivatives of ha and hb. Storage is
// row-major with x fastest: idx = k*nx + j.
struct State2D {
    int nx = 0, ny = 0;
    std::vector<double> h, hu, hv, ha, hb, A, B;

    State2D() = default;
    State2D(int nx_, int ny_) : nx(nx_), ny(ny_) {
        const std::size_t m = std::size_t(nx) * ny;
        for (auto* p : arrays()) p->assign(m, 0.0);
    }

    std::size_t idx(int j, int k) const { return std::size_t(k) * nx + j; }
    std::array<std::vector<double>*, 7> arrays() { return {&h, &hu, &hv, &ha, &hb, &A, &B}; }
    std::array<const std::vector<double>*, 7> arrays() const {
        return {&h, &hu, &hv, &ha, &hb, &A, &B};
    }
};

// out = ca*x + cb*y, componentwise over all state arrays
template <class StateT>
void lincomb(StateT& out, double ca, const StateT& x, double cb, const StateT& y) {
    auto po = out.arrays();
    auto px = x.arrays();
    auto py = y.arrays();
    for (std::size_t f = 0; f < po.size(); ++f) {
        auto& o = *po[f];
        const auto& a = *px[f];
        const auto& b = *py[f];
        for (std::size_t i = 0; i < o.size(); ++i) o[i] = ca * a[i] + cb * b[i];
    }
}

template <class StateT>
bool all_finite(const StateT& s) {
    for (const auto* p : s.arrays())
        for (double v : *p)
            if (!std::isfinite(v)) return false;
    return true;
}

}  // namespace mrsw
