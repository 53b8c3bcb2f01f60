#include <lgraph/error.hpp>
#include <lgraph/grassmann.hpp>

#include <cmath>

namespace lgraph {

namespace {

void require_symmetric_unitary(const Eigen::MatrixXcd& m, const char* which)
{
    const auto n = m.rows();
    if (n < 1 || m.cols() != n) throw ArgumentError(std::string(which) + " must be a nonempty square matrix");
    const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    const double unit = (m * m.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
    if (asym > 1e-10 || unit > 1e-10) throw ArgumentError(std::string(which) + " is not symmetric unitary");
}

} // namespace

Eigen::MatrixXcd sigma(double t, int n)
{
    if (n < 1) throw ArgumentError("sigma: dimension must be positive");
    const Complex phase = std::polar(1.0, t / std::sqrt(static_cast<double>(n)));
    return phase * Eigen::MatrixXcd::Identity(n, n);
}

Eigen::MatrixXcd sigma_velocity(int n)
{
    if (n < 1) throw ArgumentError("sigma: dimension must be positive");
    return Complex(0.0, 1.0 / std::sqrt(static_cast<double>(n))) * Eigen::MatrixXcd::Identity(n, n);
}

FiberPoint project_to_fiber0(const GaussPoint& g)
{
    const double shift = g.psi / g.dim;
    FiberPoint f;
    f.rep = std::polar(1.0, -shift) * g.rep;
    f.angles = g.thetas.array() - shift;
    return f;
}

Eigen::MatrixXcd cartan_point(const Eigen::MatrixXcd& u) { return u * u.transpose(); }

double coset_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b)
{
    require_symmetric_unitary(a, "coset_distance: first argument");
    require_symmetric_unitary(b, "coset_distance: second argument");
    if (a.rows() != b.rows()) throw ArgumentError("coset_distance: dimension mismatch");

    // For symmetric unitary A, A^{-1} = conj(A).
    const Eigen::MatrixXcd quotient = a.conjugate() * b;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(quotient, false);
    if (eig.info() != Eigen::Success) throw NumericError("coset_distance: eigen-solver failed to converge");

    double sum = 0.0;
    for (const Complex& mu : eig.eigenvalues()) {
        if (std::abs(mu + 1.0) < 1e-6)
            throw NumericError("coset_distance: eigenvalue at -1, outside the principal branch");
        const double half = 0.5 * std::arg(mu);
        sum += half * half;
    }
    return std::sqrt(sum);
}

} // namespace lgraph
