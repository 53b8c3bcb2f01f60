#pragma once

// Lagrangian planes in C^n as points of U(n)/SO(n), and the geometry of the
// fibration det: U(n)/SO(n) -> S^1.
//
// A plane is carried by its symmetric unitary representative
// V = S diag(e^{i theta_k}) S^T. Distances are measured on the Cartan
// embedding [U] -> U U^T (for the symmetric representative this is V^2),
// normalized so that the geodesic [diag(e^{i t theta_k})] has speed
// |theta| under the metric Re tr(A B^*).

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace lgraph {

using Complex = std::complex<double>;

struct GaussPoint
{
    int dim = 0;
    Eigen::VectorXd lambdas; // ascending
    Eigen::MatrixXd frame;   // S, det S = +1, columns are eigenvectors
    Eigen::VectorXd thetas;  // arctan(lambdas), each in (-pi/2, pi/2)
    double psi = 0.0;        // lifted Lagrangian angle, sum of thetas
    Eigen::MatrixXcd rep;    // V
    int component = 0;       // l with psi - 2 pi l in (-pi, pi]
};

/// Point of the standard fiber F_0 = SU(n)/SO(n).
struct FiberPoint
{
    Eigen::MatrixXcd rep;   // symmetric unitary, det = 1
    Eigen::VectorXd angles; // eigen-angles of rep, summing to zero
};

GaussPoint plane_from_hessian(const Eigen::MatrixXd& hessian);

/// det(V), i.e. the Gauss map followed by det; equals e^{i psi}.
Complex det_fiber(const GaussPoint& g);

/// Horizontal closed geodesic of scalar matrices diag(e^{i t / sqrt(n)}).
Eigen::MatrixXcd sigma(double t, int n);

/// Tangent of sigma at t = 0: (i / sqrt(n)) I.
Eigen::MatrixXcd sigma_velocity(int n);

FiberPoint project_to_fiber0(const GaussPoint& g);

/// Cartan-embedding point U U^T of the coset [U]; for symmetric U this is U^2.
Eigen::MatrixXcd cartan_point(const Eigen::MatrixXcd& u);

/// Symmetric-space distance between two Cartan-embedding points.
///
/// Takes the principal eigen-angles phi_k of conj(A) B = A^{-1} B and returns
/// sqrt(sum (phi_k / 2)^2). Throws NumericError if some eigenvalue lies within
/// 1e-6 of -1 (outside the principal branch).
double coset_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

double tube_deviation(const Eigen::VectorXd& thetas);

/// Unique l with sum(thetas) - 2 pi l in (-pi, pi].
int component_index(const Eigen::VectorXd& thetas);
int component_index(double psi);

/// Canonical symplectic form on R^{2n} = C^n, coordinates (x, y) with
/// J(x, y) = (-y, x) and omega(v, w) = <J v, w>.
Eigen::MatrixXd complex_structure(int n);

/// Basis of J(P^perp) for the column span P of `basis` (2n x n).
Eigen::MatrixXd f_omega(const Eigen::MatrixXd& basis);

/// True iff omega vanishes on the column span of `basis` (2n x n, rank n).
bool is_lagrangian(const Eigen::MatrixXd& basis, double tol = 1e-9);

/// Columns (e_i, M e_i): tangent plane of the graph of M.
Eigen::MatrixXd graph_basis(const Eigen::MatrixXd& m);

struct SelfTestCheck
{
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SelfTestReport
{
    int dim = 0;
    std::vector<SelfTestCheck> checks;

    bool all_pass() const;
};

/// Numerical checks of the det-fibration geometry for 2 <= n <= 5.
/// Failures are recorded in the report, never thrown.
SelfTestReport submersion_selftest(int n, unsigned seed = 1729u);

} // namespace lgraph
