#include "geometry.hpp"

#include <lgraph/error.hpp>

#include <cmath>
#include <limits>

namespace lgraph {

namespace detail {

namespace {

constexpr double undefined = std::numeric_limits<double>::quiet_NaN();

// Central-difference gradient of psi at points one cell deep; empty elsewhere.
std::vector<Eigen::VectorXd> psi_gradient(const Geometry& geo)
{
    const GridDomain& dom = *geo.domain;
    const int n = dom.dim();
    std::vector<Eigen::VectorXd> grad(dom.size());
    for (std::size_t p = 0; p < dom.size(); ++p) {
        if (!dom.is_interior(p, 1)) continue;
        Eigen::VectorXd g(n);
        for (int k = 0; k < n; ++k) {
            const std::size_t s = dom.stride(k);
            g(k) = (geo.psi[p + s] - geo.psi[p - s]) / (2.0 * dom.spacing(k));
        }
        grad[p] = std::move(g);
    }
    return grad;
}

// X = grad_g psi = g^{-1} d psi at points one cell deep.
std::vector<Eigen::VectorXd> gradient_field(const Geometry& geo, const std::vector<Eigen::VectorXd>& dpsi)
{
    std::vector<Eigen::VectorXd> x(dpsi.size());
    for (std::size_t p = 0; p < dpsi.size(); ++p)
        if (dpsi[p].size() > 0) x[p] = geo.inverse[p] * dpsi[p];
    return x;
}

} // namespace

Geometry compute_geometry(const JetGrid& grid)
{
    Geometry geo;
    geo.domain = &grid.domain;
    const std::size_t count = grid.domain.size();
    if (grid.jets.size() != count) throw ArgumentError("jet grid shape does not match its domain");
    geo.gauss.reserve(count);
    geo.psi.reserve(count);
    geo.metric.reserve(count);
    geo.inverse.reserve(count);
    geo.volume.reserve(count);
    const int n = grid.domain.dim();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    for (const JetValue& jet : grid.jets) {
        Eigen::MatrixXd g = eye + jet.hessian * jet.hessian;
        g = 0.5 * (g + g.transpose());
        Eigen::MatrixXd inv = g.ldlt().solve(eye);
        inv = 0.5 * (inv + inv.transpose());
        geo.gauss.push_back(plane_from_hessian(jet.hessian));
        geo.psi.push_back(geo.gauss.back().psi);
        geo.volume.push_back(std::sqrt(g.determinant()));
        geo.metric.push_back(std::move(g));
        geo.inverse.push_back(std::move(inv));
    }
    return geo;
}

ScalarGrid laplace_beltrami(const Geometry& geo)
{
    const GridDomain& dom = *geo.domain;
    const int n = dom.dim();
    const auto dpsi = psi_gradient(geo);

    std::vector<Eigen::VectorXd> flux(dom.size());
    for (std::size_t p = 0; p < dom.size(); ++p)
        if (dpsi[p].size() > 0) flux[p] = geo.volume[p] * (geo.inverse[p] * dpsi[p]);

    ScalarGrid out(dom.size(), undefined);
    for (std::size_t p = 0; p < dom.size(); ++p) {
        if (!dom.is_interior(p, residual_depth)) continue;
        double div = 0.0;
        for (int k = 0; k < n; ++k) {
            const std::size_t s = dom.stride(k);
            div += (flux[p + s](k) - flux[p - s](k)) / (2.0 * dom.spacing(k));
        }
        out[p] = div / geo.volume[p];
    }
    return out;
}

ScalarGrid mean_curvature(const Geometry& geo)
{
    const GridDomain& dom = *geo.domain;
    const auto dpsi = psi_gradient(geo);
    ScalarGrid out(dom.size(), undefined);
    for (std::size_t p = 0; p < dom.size(); ++p) {
        if (!dom.is_interior(p, residual_depth)) continue;
        const double sq = dpsi[p].dot(geo.inverse[p] * dpsi[p]);
        out[p] = std::sqrt(std::max(sq, 0.0));
    }
    return out;
}

ScalarGrid conformal_residual(const Geometry& geo)
{
    const GridDomain& dom = *geo.domain;
    const int n = dom.dim();
    const auto x = gradient_field(geo, psi_gradient(geo));

    ScalarGrid out(dom.size(), undefined);
    for (std::size_t p = 0; p < dom.size(); ++p) {
        if (!dom.is_interior(p, residual_depth)) continue;
        const Eigen::MatrixXd& g = geo.metric[p];

        // lie = X^k d_k g + D^T g + g D with D(k, i) = d_i X^k.
        Eigen::MatrixXd lie = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd jac(n, n);
        double div = 0.0;
        for (int k = 0; k < n; ++k) {
            const std::size_t s = dom.stride(k);
            const double h2 = 2.0 * dom.spacing(k);
            lie += x[p](k) * (geo.metric[p + s] - geo.metric[p - s]) / h2;
            jac.col(k) = (x[p + s] - x[p - s]) / h2;
            div += (geo.volume[p + s] * x[p + s](k) - geo.volume[p - s] * x[p - s](k)) / h2;
        }
        div /= geo.volume[p];
        lie += jac.transpose() * g + g * jac;
        out[p] = (lie - (2.0 * div / n) * g).norm();
    }
    return out;
}

} // namespace detail

ScalarGrid laplace_beltrami_residual(const JetGrid& grid)
{
    return detail::laplace_beltrami(detail::compute_geometry(grid));
}

ScalarGrid mean_curvature_norm(const JetGrid& grid)
{
    return detail::mean_curvature(detail::compute_geometry(grid));
}

ScalarGrid cmf_residual(const JetGrid& grid)
{
    return detail::conformal_residual(detail::compute_geometry(grid));
}

} // namespace lgraph
