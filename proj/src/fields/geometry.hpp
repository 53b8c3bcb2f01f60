#pragma once

#include <lgraph/fields.hpp>

namespace lgraph::detail {

/// Pointwise induced-metric data shared by the stencil passes.
struct Geometry
{
    const GridDomain* domain = nullptr;
    std::vector<GaussPoint> gauss;
    std::vector<double> psi;
    std::vector<Eigen::MatrixXd> metric;
    std::vector<Eigen::MatrixXd> inverse;
    std::vector<double> volume; // sqrt(det g)
};

Geometry compute_geometry(const JetGrid& grid);

ScalarGrid laplace_beltrami(const Geometry& geo);
ScalarGrid mean_curvature(const Geometry& geo);
ScalarGrid conformal_residual(const Geometry& geo);

} // namespace lgraph::detail
