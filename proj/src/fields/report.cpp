#include "geometry.hpp"

#include <cmath>
#include <limits>

namespace lgraph {

Extremum extremum(const GridDomain& domain, const ScalarGrid& field, bool minimum)
{
    Extremum e;
    e.value = std::numeric_limits<double>::quiet_NaN();
    bool found = false;
    for (std::size_t p = 0; p < field.size(); ++p) {
        const double v = field[p];
        if (std::isnan(v)) continue;
        if (!found || (minimum ? v < e.value : v > e.value)) {
            e.value = v;
            e.index = p;
            found = true;
        }
    }
    if (found) e.point = domain.point(e.index);
    return e;
}

namespace {

// Mean of the Hessian field, accumulated as offsets from the first sample so
// that a constant field reproduces its value exactly.
Eigen::MatrixXd mean_hessian(const JetGrid& grid)
{
    const Eigen::MatrixXd& base = grid.jets.front().hessian;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(base.rows(), base.cols());
    for (const JetValue& j : grid.jets) acc += j.hessian - base;
    return base + acc / static_cast<double>(grid.jets.size());
}

double isotropy_deviation(const Eigen::MatrixXd& h)
{
    const auto n = h.rows();
    const double first = h(0, 0);
    const double mean = first + (h.diagonal().array() - first).sum() / static_cast<double>(n);
    return (h - mean * Eigen::MatrixXd::Identity(n, n)).norm();
}

} // namespace

FieldReport field_report(const JetGrid& grid)
{
    const detail::Geometry geo = detail::compute_geometry(grid);
    const GridDomain& dom = grid.domain;
    const std::size_t count = dom.size();

    FieldReport r{dom, geo.psi, {}, geo.volume, {}, {}, {}, {}, {}, {}, {}, {}};
    const Eigen::MatrixXd mean = mean_hessian(grid);
    r.min_eigen_field.resize(count);
    r.tube_dev_field.resize(count);
    r.hess_norm_field.resize(count);
    r.affinity_field.resize(count);
    r.isotropy_field.resize(count);
    for (std::size_t p = 0; p < count; ++p) {
        const Eigen::MatrixXd& h = grid.jets[p].hessian;
        r.min_eigen_field[p] = geo.gauss[p].lambdas(0);
        r.tube_dev_field[p] = tube_deviation(geo.gauss[p].thetas);
        r.hess_norm_field[p] = h.norm();
        r.affinity_field[p] = (h - mean).norm();
        r.isotropy_field[p] = isotropy_deviation(h);
    }

    r.hmin_residual_field = detail::laplace_beltrami(geo);
    for (double& v : r.hmin_residual_field) v = std::abs(v);
    r.cmf_residual_field = detail::conformal_residual(geo);
    r.mean_curvature_norm_field = detail::mean_curvature(geo);

    FieldSummaries& s = r.summaries;
    s.min_eigen = extremum(dom, r.min_eigen_field, true);
    s.sup_delta_u = extremum(dom, r.delta_u_field, false);
    s.sup_tube_dev = extremum(dom, r.tube_dev_field, false);
    s.sup_hmin_residual = extremum(dom, r.hmin_residual_field, false);
    s.sup_cmf_residual = extremum(dom, r.cmf_residual_field, false);
    s.sup_mean_curv = extremum(dom, r.mean_curvature_norm_field, false);
    s.affinity_residual = extremum(dom, r.affinity_field, false);
    s.isotropy_residual = extremum(dom, r.isotropy_field, false);
    s.hess_sup_norm = extremum(dom, r.hess_norm_field, false);
    return r;
}

} // namespace lgraph
