#pragma once

#include <vector>

#include "mrsw/types.hpp"

namespace mrsw {

// Time-independent bottom topography, sampled at cell centers and evaluable at
// arbitrary points (interfaces, ghost centers). Analytic descriptors are
// evaluated exactly everywhere; tabulated data is interpolated linearly.
class Topography1D {
  public:
    Topography1D() = default;
    Topography1D(const TopoDesc& d, const Grid1D& grid);

    double at(double y) const;
    double center(int c) const { return at(grid_.center(c)); }
    const std::vector<double>& centers() const { return z_; }

  private:
    TopoDesc desc_;
    Grid1D grid_;
    std::vector<double> z_;
};

class Topography2D {
  public:
    Topography2D() = default;
    Topography2D(const TopoDesc& d, const Grid2D& grid);

    double at(double x, double y) const;
    double center(int j, int k) const { return at(grid_.xcenter(j), grid_.ycenter(k)); }
    const std::vector<double>& centers() const { return z_; }

  private:
    TopoDesc desc_;
    Grid2D grid_;
    std::vector<double> z_;
};

}  // namespace mrsw
