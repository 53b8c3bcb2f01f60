#include <lgraph/error.hpp>
#include <lgraph/grassmann.hpp>

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lgraph;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

const Complex I1(0.0, 1.0);

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

VectorXd vec(std::initializer_list<double> v)
{
    VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index k = 0;
    for (double x : v) out(k++) = x;
    return out;
}

MatrixXcd diag_phase(const VectorXd& angles)
{
    Eigen::VectorXcd d(angles.size());
    for (Eigen::Index k = 0; k < angles.size(); ++k) d(k) = std::polar(1.0, angles(k));
    return d.asDiagonal();
}

} // namespace

TEST(PlaneFromHessian, ZeroIsBasePlane)
{
    for (int n = 1; n <= 4; ++n) {
        const auto g = plane_from_hessian(MatrixXd::Zero(n, n));
        EXPECT_LT(max_abs(g.rep - MatrixXcd::Identity(n, n)), 1e-15);
        EXPECT_EQ(g.psi, 0.0);
        EXPECT_EQ(g.thetas.cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ(g.component, 0);
        EXPECT_NEAR(g.frame.determinant(), 1.0, 1e-14);
    }
}

TEST(PlaneFromHessian, Saddle)
{
    const auto g = plane_from_hessian(vec({1.0, -1.0}).asDiagonal());
    EXPECT_NEAR(g.thetas(0), -M_PI / 4, 1e-15);
    EXPECT_NEAR(g.thetas(1), M_PI / 4, 1e-15);
    EXPECT_NEAR(g.psi, 0.0, 1e-15);
    Eigen::ComplexEigenSolver<MatrixXcd> eig(g.rep);
    std::vector<double> args;
    for (const auto& mu : eig.eigenvalues()) args.push_back(std::arg(mu));
    std::sort(args.begin(), args.end());
    EXPECT_NEAR(args[0], -M_PI / 4, 1e-14);
    EXPECT_NEAR(args[1], M_PI / 4, 1e-14);
    EXPECT_LT(std::abs(g.rep.determinant() - 1.0), 1e-14);
}

TEST(PlaneFromHessian, IsotropicThree)
{
    const auto g = plane_from_hessian(MatrixXd::Identity(3, 3));
    // Independent product S diag S^T with the identity frame.
    const MatrixXcd expected = std::polar(1.0, M_PI / 4) * MatrixXcd::Identity(3, 3);
    EXPECT_LT(max_abs(g.rep - expected), 1e-15);
    EXPECT_NEAR(g.psi, 3 * M_PI / 4, 1e-15);
    EXPECT_EQ(tube_deviation(g.thetas), 0.0);
}

TEST(PlaneFromHessian, RejectsBadInput)
{
    MatrixXd h(2, 2);
    h << 1.0, 2.0, 2.0 + 1e-9, 1.0;
    EXPECT_THROW(plane_from_hessian(h), ArgumentError);
    EXPECT_THROW(plane_from_hessian(MatrixXd::Zero(2, 3)), ArgumentError);
    EXPECT_THROW(plane_from_hessian(MatrixXd(0, 0)), ArgumentError);
    h << 1.0, NAN, NAN, 1.0;
    EXPECT_THROW(plane_from_hessian(h), ArgumentError);
    // Rounding-level asymmetry is accepted.
    h << 1.0, 0.3, 0.3 + 1e-17, 1.0;
    EXPECT_NO_THROW(plane_from_hessian(h));
}

TEST(PlaneFromHessian, RandomInvariants)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + trial % 3;
        const MatrixXd h = oracle::random_symmetric(n, 5.0, rng);
        const auto g = plane_from_hessian(h);
        ASSERT_NEAR(g.frame.determinant(), 1.0, 1e-12);
        for (int k = 1; k < n; ++k) ASSERT_LE(g.lambdas(k - 1), g.lambdas(k));
        ASSERT_LT(max_abs(g.rep - g.rep.transpose()), 1e-10);
        ASSERT_LT(max_abs(g.rep * g.rep.adjoint() - MatrixXcd::Identity(n, n)), 1e-10);
        ASSERT_LT(std::abs(det_fiber(g) - std::polar(1.0, g.psi)), 1e-10);
        ASSERT_LT(std::abs(g.psi), n * M_PI / 2);

        // Frame-independence: rebuild V from a Jacobi decomposition with its own ordering.
        const auto jac = oracle::jacobi_eigen(h);
        ASSERT_LT(max_abs(g.rep - oracle::symmetric_rep(jac.vectors, jac.values)), 1e-8);
    }
}

TEST(PlaneFromHessian, DegenerateSpectrumInvariance)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const MatrixXd q = oracle::random_rotation(4, rng);
        const VectorXd lam = vec({-1.5, 0.7, 0.7, 0.7});
        const MatrixXd h0 = q * lam.asDiagonal() * q.transpose();
        const MatrixXd h = 0.5 * (h0 + h0.transpose());
        const auto g = plane_from_hessian(h);

        // Rotate the frame inside the repeated eigenspace.
        MatrixXd block = MatrixXd::Identity(4, 4);
        block.bottomRightCorner(3, 3) = oracle::random_rotation(3, rng);
        const MatrixXd frame = q * block;
        ASSERT_LT(max_abs(g.rep - oracle::symmetric_rep(frame, lam)), 1e-9);
    }
}

TEST(DetFiber, Examples)
{
    EXPECT_LT(std::abs(det_fiber(plane_from_hessian(MatrixXd::Zero(3, 3))) - 1.0), 1e-15);
    EXPECT_LT(std::abs(det_fiber(plane_from_hessian(vec({1.0, -1.0}).asDiagonal())) - 1.0), 1e-14);
    EXPECT_LT(std::abs(det_fiber(plane_from_hessian(MatrixXd::Identity(2, 2))) - I1), 1e-14);
}

TEST(Sigma, Basics)
{
    for (int n = 1; n <= 5; ++n) {
        EXPECT_LT(max_abs(sigma(0.0, n) - MatrixXcd::Identity(n, n)), 1e-15);
        // Closes as a coset: sigma(2 pi sqrt n) * conj is a real orthogonal matrix.
        const MatrixXcd s = sigma(2 * M_PI * std::sqrt(double(n)), n);
        EXPECT_LT(s.imag().cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT((s.real() * s.real().transpose() - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT(max_abs(sigma_velocity(n) - (I1 / std::sqrt(double(n))) * MatrixXcd::Identity(n, n)), 1e-15);
    }
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int k = 0; k < 100; ++k) {
        const double t = u(rng);
        for (int n = 2; n <= 4; ++n)
            ASSERT_LT(std::abs(sigma(t, n).determinant() - std::polar(1.0, std::sqrt(double(n)) * t)), 1e-12);
    }
    EXPECT_THROW(sigma(0.0, 0), ArgumentError);
}

TEST(ProjectToFiber0, Examples)
{
    auto f = project_to_fiber0(plane_from_hessian(2.5 * MatrixXd::Identity(3, 3)));
    EXPECT_LT(max_abs(f.rep - MatrixXcd::Identity(3, 3)), 1e-15);
    EXPECT_LT(f.angles.cwiseAbs().maxCoeff(), 1e-15);

    const auto saddle = plane_from_hessian(vec({1.0, -1.0}).asDiagonal());
    f = project_to_fiber0(saddle);
    EXPECT_LT(max_abs(f.rep - saddle.rep), 1e-15);
    EXPECT_NEAR(f.angles(0), -M_PI / 4, 1e-15);
    EXPECT_NEAR(f.angles(1), M_PI / 4, 1e-15);

    const auto g = plane_from_hessian(vec({2.0, 0.0, 0.0}).asDiagonal());
    f = project_to_fiber0(g);
    const double psi = std::atan(2.0);
    VectorXd sorted = f.angles;
    std::sort(sorted.data(), sorted.data() + 3);
    EXPECT_NEAR(sorted(0), -psi / 3, 1e-15);
    EXPECT_NEAR(sorted(1), -psi / 3, 1e-15);
    EXPECT_NEAR(sorted(2), psi - psi / 3, 1e-15);
    EXPECT_LT(std::abs(f.rep.determinant() - 1.0), 1e-10);
    EXPECT_LT(std::abs(f.angles.sum()), 1e-15);
}

TEST(CosetDistance, Calibration)
{
    const MatrixXcd id = MatrixXcd::Identity(2, 2);
    EXPECT_EQ(coset_distance(id, id), 0.0);
    EXPECT_NEAR(coset_distance(id, diag_phase(vec({0.6, -0.6}))), 0.3 * std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(coset_distance(MatrixXcd::Identity(3, 3), diag_phase(2 * vec({0.1, -0.4, 0.25}))),
                std::sqrt(0.01 + 0.16 + 0.0625), 1e-15);
}

TEST(CosetDistance, SigmaIsUnitSpeed)
{
    // Valid while the doubled phase 2t/sqrt(n) stays below pi.
    for (int n = 1; n <= 4; ++n) {
        const double limit = M_PI * std::sqrt(double(n)) / 2;
        for (double frac : {-0.95, -0.5, -0.1, 0.0, 0.3, 0.9}) {
            const double t = frac * limit;
            EXPECT_NEAR(coset_distance(MatrixXcd::Identity(n, n), cartan_point(sigma(t, n))), std::abs(t), 1e-12);
        }
    }
}

TEST(CosetDistance, MatchesSampledArcLength)
{
    // Arc length of t -> [diag(e^{i t theta})] under Re tr(A B^*) on the Cartan image.
    const VectorXd theta = vec({0.3, -0.3});
    const int steps = 2000;
    double length = 0.0;
    MatrixXcd prev = cartan_point(diag_phase(0.0 * theta));
    for (int k = 1; k <= steps; ++k) {
        const MatrixXcd cur = cartan_point(diag_phase(double(k) / steps * theta));
        length += (cur - prev).norm() / 2.0;
        prev = cur;
    }
    EXPECT_NEAR(coset_distance(MatrixXcd::Identity(2, 2), cartan_point(diag_phase(theta))), length, 1e-6);
    EXPECT_NEAR(length, 0.3 * std::sqrt(2.0), 1e-6);
}

TEST(CosetDistance, BranchAndInputErrors)
{
    const MatrixXcd id = MatrixXcd::Identity(2, 2);
    EXPECT_THROW(coset_distance(id, diag_phase(vec({M_PI, 0.0}))), NumericError);
    EXPECT_THROW(coset_distance(id, diag_phase(vec({M_PI - 1e-8, 0.0}))), NumericError);
    EXPECT_NO_THROW(coset_distance(id, diag_phase(vec({M_PI - 1e-3, 0.0}))));
    MatrixXcd bad = id;
    bad(0, 1) = 0.1;
    EXPECT_THROW(coset_distance(id, bad), ArgumentError);
    EXPECT_THROW(coset_distance(id, MatrixXcd::Identity(3, 3)), ArgumentError);
    EXPECT_THROW(coset_distance(id, 2.0 * id), ArgumentError);
}

TEST(TubeDeviation, Examples)
{
    EXPECT_EQ(tube_deviation(vec({0.7, 0.7, 0.7})), 0.0);
    EXPECT_EQ(tube_deviation(vec({-1.1, -1.1})), 0.0);
    EXPECT_NEAR(tube_deviation(vec({M_PI / 4, -M_PI / 4})), M_PI / (2 * std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(tube_deviation(vec({0.1, 0.2, 0.3})), std::sqrt(0.02), 1e-15);
    EXPECT_NEAR(tube_deviation(vec({0.0, std::atan(3.0)})), std::atan(3.0) / std::sqrt(2.0), 1e-15);
}

TEST(TubeDeviation, MatchesFiberDistance)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 500; ++trial) {
        const int n = 2 + trial % 3;
        VectorXd theta(n);
        for (int k = 0; k < n; ++k) theta(k) = u(rng) * M_PI / 2 * 0.999;
        const double mean = theta.mean();
        if ((theta.array() - mean).abs().maxCoeff() >= M_PI / 2 * 0.99) continue;
        const auto g = plane_from_hessian(theta.array().tan().matrix().asDiagonal());
        const double d = coset_distance(MatrixXcd::Identity(n, n), cartan_point(project_to_fiber0(g).rep));
        ASSERT_NEAR(tube_deviation(g.thetas), d, 1e-8);
        ASSERT_LE(tube_deviation(theta), theta.norm() + 1e-15);
        ++checked;
    }
    EXPECT_EQ(checked, 500);
}

TEST(ComponentIndex, Examples)
{
    EXPECT_EQ(component_index(VectorXd::Zero(4)), 0);
    EXPECT_EQ(component_index(VectorXd::Constant(5, 0.45 * M_PI)), 1);
    EXPECT_EQ(component_index(VectorXd::Constant(5, -0.45 * M_PI)), -1);
    EXPECT_EQ(component_index(M_PI), 0);
    EXPECT_EQ(component_index(-M_PI), -1);
    EXPECT_EQ(component_index(3 * M_PI), 1);
    EXPECT_EQ(component_index(-3 * M_PI + 1e-12), -1);
}

namespace {

// Exhaustive angle grid {-0.49 pi, ..., 0.49 pi} at 0.07 pi steps; returns (min l, max l).
std::pair<int, int> component_range(int n)
{
    std::vector<double> values;
    for (int k = -7; k <= 7; ++k) values.push_back(k * 0.07 * M_PI);
    std::vector<int> idx(n, 0);
    int lo = 0, hi = 0;
    while (true) {
        VectorXd theta(n);
        for (int k = 0; k < n; ++k) theta(k) = values[idx[k]];
        const int l = component_index(theta);
        lo = std::min(lo, l);
        hi = std::max(hi, l);
        int k = 0;
        while (k < n && ++idx[k] == static_cast<int>(values.size())) idx[k++] = 0;
        if (k == n) break;
    }
    return {lo, hi};
}

} // namespace

TEST(ComponentIndex, RangeOnAngleGrid)
{
    for (int n : {1, 2, 4}) {
        const auto [lo, hi] = component_range(n);
        EXPECT_GE(lo, -(n / 4) - 1) << n;
        EXPECT_LE(hi, n / 4) << n;
    }
    // For n = 3 the sum reaches 1.47 pi > pi, so l = 1 occurs; |l| <= floor((n+1)/4) is the tight bound.
    for (int n = 1; n <= 4; ++n) {
        const auto [lo, hi] = component_range(n);
        EXPECT_LE(std::max(-lo, hi), (n + 1) / 4) << n;
    }
    EXPECT_EQ(component_index(VectorXd::Constant(3, 0.42 * M_PI)), 1);
}

TEST(Lagrangian, Examples)
{
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_lagrangian(graph_basis(oracle::random_symmetric(n, 3.0, rng))));

    MatrixXd complex_line = MatrixXd::Zero(4, 2);
    complex_line(0, 0) = 1.0;
    complex_line.col(1) = complex_structure(2) * complex_line.col(0);
    EXPECT_TRUE(complex_line(2, 1) == 1.0);
    EXPECT_FALSE(is_lagrangian(complex_line));

    MatrixXd m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    EXPECT_FALSE(is_lagrangian(graph_basis(m)));
}

TEST(Lagrangian, FOmegaFixesLagrangianPlanes)
{
    std::mt19937_64 rng(22);
    for (int n = 2; n <= 4; ++n) {
        const MatrixXd b = graph_basis(oracle::random_symmetric(n, 2.0, rng));
        const MatrixXd f = f_omega(b);
        // Same column span: projecting f onto span(b) changes nothing.
        const MatrixXd q = Eigen::HouseholderQR<MatrixXd>(b).householderQ() * MatrixXd::Identity(2 * n, n);
        EXPECT_LT((f - q * (q.transpose() * f)).cwiseAbs().maxCoeff(), 1e-12);
    }
    const MatrixXd j = complex_structure(3);
    EXPECT_LT((j * j + MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Lagrangian, RankDeficientBasis)
{
    EXPECT_THROW(is_lagrangian(MatrixXd::Zero(4, 2)), ArgumentError);
    EXPECT_THROW(is_lagrangian(MatrixXd::Zero(3, 2)), ArgumentError);
}

TEST(SelfTest, AllChecksPass)
{
    for (int n = 2; n <= 5; ++n) {
        const auto r = submersion_selftest(n);
        ASSERT_EQ(r.checks.size(), 6u);
        for (const auto& c : r.checks) {
            EXPECT_TRUE(c.pass) << n << " " << c.name << " measured " << c.measured;
            EXPECT_EQ(c.pass, std::abs(c.measured - c.expected) <= c.tolerance);
        }
        EXPECT_TRUE(r.all_pass());
    }
}

TEST(SelfTest, NamedValues)
{
    const auto r = submersion_selftest(3);
    const auto find = [&](const std::string& name) {
        for (const auto& c : r.checks)
            if (c.name == name) return c;
        ADD_FAILURE() << "missing check " << name;
        return SelfTestCheck{};
    };
    EXPECT_EQ(find("det_winding").measured, 3.0);
    EXPECT_EQ(find("det_winding").tolerance, 0.0);
    EXPECT_NEAR(find("det_speed").expected, std::sqrt(3.0), 1e-15);
    EXPECT_EQ(find("fiber_orthogonality").tolerance, 1e-12);
    EXPECT_THROW(submersion_selftest(1), ArgumentError);
    EXPECT_THROW(submersion_selftest(6), ArgumentError);
}

TEST(SelfTest, FiberOrthogonalityExample)
{
    const MatrixXcd t = vec({1.0, -1.0}).cast<Complex>().asDiagonal() * (I1 / std::sqrt(2.0));
    EXPECT_LT(std::abs((sigma_velocity(2) * t.adjoint()).trace().real()), 1e-12);
}
