#include <lgraph/error.hpp>
#include <lgraph/grassmann.hpp>

#include <cmath>

namespace lgraph {

GaussPoint plane_from_hessian(const Eigen::MatrixXd& hessian)
{
    const auto n = hessian.rows();
    if (n < 1 || hessian.cols() != n) throw ArgumentError("Hessian must be a nonempty square matrix");
    if (!hessian.allFinite()) throw ArgumentError("Hessian has non-finite entries");
    const double scale = std::max(1.0, hessian.cwiseAbs().maxCoeff());
    if ((hessian - hessian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ArgumentError("Hessian is not symmetric");

    const Eigen::MatrixXd sym = 0.5 * (hessian + hessian.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    if (eig.info() != Eigen::Success) throw NumericError("symmetric eigen-solver failed to converge");

    GaussPoint g;
    g.dim = static_cast<int>(n);
    g.lambdas = eig.eigenvalues();
    g.frame = eig.eigenvectors();
    if (g.frame.determinant() < 0.0) g.frame.col(n - 1) *= -1.0;

    g.thetas = g.lambdas.array().atan().matrix();
    g.psi = g.thetas.sum();

    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, g.thetas(k));
    const Eigen::MatrixXcd s = g.frame.cast<Complex>();
    Eigen::MatrixXcd v = s * phases.asDiagonal() * s.transpose();
    g.rep = 0.5 * (v + v.transpose());
    g.component = component_index(g.psi);
    return g;
}

Complex det_fiber(const GaussPoint& g) { return g.rep.determinant(); }

int component_index(double psi)
{
    // Smallest l with psi - 2 pi l <= pi; then psi - 2 pi l > -pi automatically.
    int l = static_cast<int>(std::ceil((psi - M_PI) / (2.0 * M_PI)));
    if (psi - 2.0 * M_PI * l > M_PI) ++l;
    if (psi - 2.0 * M_PI * l <= -M_PI) --l;
    return l;
}

int component_index(const Eigen::VectorXd& thetas) { return component_index(thetas.sum()); }

double tube_deviation(const Eigen::VectorXd& thetas)
{
    const auto n = thetas.size();
    if (n == 0) return 0.0;
    // Mean taken relative to the first entry so equal angles give exactly zero.
    const double mean = thetas(0) + (thetas.array() - thetas(0)).sum() / static_cast<double>(n);
    return std::sqrt((thetas.array() - mean).square().sum());
}

Eigen::MatrixXd complex_structure(int n)
{
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
    j.bottomLeftCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    return j;
}

namespace {

// Orthonormal basis of R^{2n} whose first n columns span the column space of `basis`.
Eigen::MatrixXd adapted_frame(const Eigen::MatrixXd& basis)
{
    const auto rows = basis.rows();
    const auto n = basis.cols();
    if (rows != 2 * n || n < 1) throw ArgumentError("plane basis must be 2n x n");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(basis);
    const auto& sv = svd.singularValues();
    if (!(sv(n - 1) > 1e-10 * std::max(1.0, sv(0)))) throw ArgumentError("plane basis is rank deficient");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
    return qr.householderQ() * Eigen::MatrixXd::Identity(rows, rows);
}

} // namespace

Eigen::MatrixXd f_omega(const Eigen::MatrixXd& basis)
{
    const auto n = basis.cols();
    const Eigen::MatrixXd q = adapted_frame(basis);
    return complex_structure(static_cast<int>(n)) * q.rightCols(n);
}

bool is_lagrangian(const Eigen::MatrixXd& basis, double tol)
{
    const auto n = basis.cols();
    const Eigen::MatrixXd q = adapted_frame(basis).leftCols(n);
    const Eigen::MatrixXd omega = q.transpose() * complex_structure(static_cast<int>(n)) * q;
    return omega.cwiseAbs().maxCoeff() <= tol;
}

Eigen::MatrixXd graph_basis(const Eigen::MatrixXd& m)
{
    const auto n = m.rows();
    if (m.cols() != n) throw ArgumentError("graph map must be square");
    Eigen::MatrixXd b(2 * n, n);
    b.topRows(n) = Eigen::MatrixXd::Identity(n, n);
    b.bottomRows(n) = m;
    return b;
}

} // namespace lgraph
