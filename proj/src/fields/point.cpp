#include <lgraph/fields.hpp>

#include <cmath>

namespace lgraph {

double volume_element(const Eigen::VectorXd& thetas)
{
    double v = 1.0;
    for (double t : thetas) v /= std::cos(t);
    return v;
}

PointAnalysis analyze_point(const JetValue& jet)
{
    PointAnalysis a;
    a.hessian = jet.hessian;
    const auto n = jet.hessian.rows();
    a.metric = Eigen::MatrixXd::Identity(n, n) + jet.hessian * jet.hessian;
    a.metric = 0.5 * (a.metric + a.metric.transpose());
    a.gauss = plane_from_hessian(jet.hessian);
    a.delta_u = std::sqrt(a.metric.determinant());
    a.delta_u_product = (1.0 + a.gauss.lambdas.array().square()).sqrt().prod();
    a.delta_u_secant = volume_element(a.gauss.thetas);
    a.tube_dev = tube_deviation(a.gauss.thetas);
    return a;
}

} // namespace lgraph
