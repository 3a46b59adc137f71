#include "mrsw/topography.hpp"

#include <cmath>

namespace mrsw {

namespace {

double eval_desc_1d(const TopoDesc& d, const Grid1D& grid, double y) {
    switch (d.kind) {
        case TopoKind::Flat:
            return 0.0;
        case TopoKind::GaussianY: {
            const double s = (y - d.center) / d.width;
            return d.amp * std::exp(-s * s);
        }
        case TopoKind::GaussianRadial:
            throw UnknownDescriptor("radial topography needs a 2-D grid");
        case TopoKind::Tabulated: {
            if ((int)d.table.size() != grid.n)
                throw UnknownDescriptor("tabulated topography size mismatch");
            // piecewise linear through cell-center samples, clamped at the ends
            const double s = (y - grid.center(0)) / grid.dy;
            if (s <= 0.0) return d.table.front();
            if (s >= grid.n - 1) return d.table.back();
            const int c = (int)s;
            const double w = s - c;
            return (1.0 - w) * d.table[c] + w * d.table[c + 1];
        }
    }
    throw UnknownDescriptor("unrecognized topography kind");
}

}  // namespace

Topography1D::Topography1D(const TopoDesc& d, const Grid1D& grid) : desc_(d), grid_(grid) {
    z_.resize(grid.n);
    for (int c = 0; c < grid.n; ++c) z_[c] = eval_desc_1d(d, grid, grid.center(c));
}

double Topography1D::at(double y) const { return eval_desc_1d(desc_, grid_, y); }

Topography2D::Topography2D(const TopoDesc& d, const Grid2D& grid) : desc_(d), grid_(grid) {
    if (d.kind == TopoKind::Tabulated)
        throw UnknownDescriptor("tabulated topography is 1-D only");
    z_.resize(grid.cells());
    for (int k = 0; k < grid.ny; ++k)
        for (int j = 0; j < grid.nx; ++j) z_[grid.idx(j, k)] = at(grid.xcenter(j), grid.ycenter(k));
}

double Topography2D::at(double x, double y) const {
    switch (desc_.kind) {
        case TopoKind::Flat:
            return 0.0;
        case TopoKind::GaussianY: {
            const double s = (y - desc_.center) / desc_.width;
            return desc_.amp * std::exp(-s * s);
        }
        case TopoKind::GaussianRadial: {
            const double r = std::sqrt(x * x + y * y);
            const double s = (r - desc_.center) / desc_.width;
            return desc_.amp * std::exp(-s * s);
        }
        default:
            throw UnknownDescriptor("unrecognized topography kind");
    }
}

}  // namespace mrsw
