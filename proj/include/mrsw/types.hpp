#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "mrsw/errors.hpp"

namespace mrsw {

// Depths at or below this are treated as unsupported near-dry states.
inline constexpr double kDepthFloor = 1e-12;

// Uniform 1-D cell grid over [y_lo, y_hi]. Cells are numbered 1..n in the
// formulas; storage is 0-based (cell c holds paper cell k=c+1). center() and
// iface() accept out-of-range indices so ghost-cell coordinates come from the
// same expressions.
struct Grid1D {
    int n = 0;
    double y_lo = 0.0;
    double y_hi = 0.0;
    double dy = 0.0;

    Grid1D() = default;
    Grid1D(int n_, double lo, double hi) : n(n_), y_lo(lo), y_hi(hi) {
        if (n < 5) throw ConfigInvalid("Grid1D: need at least 5 cells");
        if (!(hi > lo)) throw ConfigInvalid("Grid1D: empty domain");
        dy = (hi - lo) / n;
    }

    // 0-based cell index; c=-1 and c=n are the first ghost cells.
    double center(int c) const { return y_lo + (c + 0.5) * dy; }
    // interface i sits between cells c=i-1 and c=i; i=0..n
    double iface(int i) const { return y_lo + i * dy; }
};

struct Grid2D {
    int nx = 0, ny = 0;
    double x_lo = 0.0, x_hi = 0.0;
    double y_lo = 0.0, y_hi = 0.0;
    double dx = 0.0, dy = 0.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double xlo, double xhi, double ylo, double yhi)
        : nx(nx_), ny(ny_), x_lo(xlo), x_hi(xhi), y_lo(ylo), y_hi(yhi) {
        if (nx < 5 || ny < 5) throw ConfigInvalid("Grid2D: need at least 5 cells per axis");
        if (!(xhi > xlo) || !(yhi > ylo)) throw ConfigInvalid("Grid2D: empty domain");
        dx = (xhi - xlo) / nx;
        dy = (yhi - ylo) / ny;
    }

    double xcenter(int j) const { return x_lo + (j + 0.5) * dx; }
    double ycenter(int k) const { return y_lo + (k + 0.5) * dy; }
    double xiface(int i) const { return x_lo + i * dx; }
    double yiface(int i) const { return y_lo + i * dy; }
    std::size_t cells() const { return std::size_t(nx) * std::size_t(ny); }
    // row-major with x fastest
    std::size_t idx(int j, int k) const { return std::size_t(k) * nx + j; }
};

enum class SchemeVariant { WB, NWB };

enum class TopoKind {
    Flat,
    GaussianY,       // amp * exp(-((y-center)/width)^2), independent of x in 2-D
    GaussianRadial,  // amp * exp(-((r-center)/width)^2), 2-D only
    Tabulated,       // cell samples, piecewise-linear point evaluation
};

struct TopoDesc {
    TopoKind kind = TopoKind::Flat;
    double amp = 0.0;
    double center = 0.0;
    double width = 1.0;
    std::vector<double> table;  // Tabulated: one value per cell (1-D only)
};

// Model parameters shared by both solvers. Coriolis parameter f(y) = f_c + beta*y.
struct ModelConfig {
    double g = 1.0;
    double f_c = 0.0;
    double beta = 0.0;
    double theta = 1.3;  // generalized minmod parameter, in [1,2]
    double cfl = 0.25;
    SchemeVariant variant = SchemeVariant::WB;
    TopoDesc topography;

    void validate() const {
        if (!(g > 0.0)) throw ConfigInvalid("ModelConfig: g must be positive");
        if (!(theta >= 1.0 && theta <= 2.0)) throw ConfigInvalid("ModelConfig: theta outside [1,2]");
        if (!(cfl > 0.0 && cfl <= 0.5)) throw ConfigInvalid("ModelConfig: cfl outside (0,0.5]");
    }
};

inline double coriolis_at(const ModelConfig& cfg, double y) { return cfg.f_c + cfg.beta * y; }

}  // namespace mrsw
