#include <lgraph/error.hpp>
#include <lgraph/grassmann.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace lgraph {

bool SelfTestReport::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const SelfTestCheck& c) { return c.pass; });
}

namespace {

SelfTestCheck make_check(std::string name, double measured, double expected, double tolerance)
{
    const bool pass = std::isfinite(measured) && std::abs(measured - expected) <= tolerance;
    return {std::move(name), measured, expected, tolerance, pass};
}

Eigen::MatrixXd random_rotation(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = normal(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    if (q.determinant() < 0.0) q.col(0) *= -1.0;
    return q;
}

// Angles with zero sum, drawn uniformly in [-amplitude, amplitude] before centering.
Eigen::VectorXd traceless_angles(int n, double amplitude, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-amplitude, amplitude);
    Eigen::VectorXd a(n);
    for (int k = 0; k < n; ++k) a(k) = u(rng);
    a.array() -= a.mean();
    return a;
}

Eigen::MatrixXcd fiber_point(const Eigen::MatrixXd& frame, const Eigen::VectorXd& angles, double t = 1.0)
{
    const auto n = angles.size();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) phases(k) = std::polar(1.0, t * angles(k));
    const Eigen::MatrixXcd s = frame.cast<Complex>();
    return s * phases.asDiagonal() * s.transpose();
}

} // namespace

SelfTestReport submersion_selftest(int n, unsigned seed)
{
    if (n < 2 || n > 5) throw ArgumentError("selftest dimension must be in [2, 5]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-10.0, 10.0);
    const double root_n = std::sqrt(static_cast<double>(n));
    const double period = 2.0 * M_PI * root_n;

    SelfTestReport report;
    report.dim = n;

    // (a) det o sigma has constant speed sqrt(n) on S^1.
    {
        const double h = 1e-5;
        double worst = root_n;
        for (int k = 0; k < 16; ++k) {
            const double t = uniform(rng);
            const Complex d = (sigma(t + h, n).determinant() - sigma(t - h, n).determinant()) / (2.0 * h);
            const double speed = std::abs(d);
            if (std::abs(speed - root_n) > std::abs(worst - root_n)) worst = speed;
        }
        report.checks.push_back(make_check("det_speed", worst, root_n, 1e-6));
    }

    // (b) sigma(2 pi sqrt(n)) lies in the coset of the identity: a real rotation.
    {
        const Eigen::MatrixXcd m = sigma(period, n);
        const Eigen::MatrixXd re = m.real();
        const double imag = m.imag().cwiseAbs().maxCoeff();
        const double ortho = (re.transpose() * re - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
        const double orient = std::abs(re.determinant() - 1.0);
        report.checks.push_back(make_check("sigma_closes", std::max({imag, ortho, orient}), 0.0, 1e-8));
    }

    // (c) Over one period, det o sigma winds n times around S^1.
    {
        const int steps = 2000 * n;
        double total = 0.0;
        Complex prev = sigma(0.0, n).determinant();
        for (int k = 1; k <= steps; ++k) {
            const Complex cur = sigma(period * k / steps, n).determinant();
            total += std::arg(cur / prev);
            prev = cur;
        }
        // A winding number is an integer; report the raw turn count when it is not close to one.
        const double turns = total / (2.0 * M_PI);
        const double winding = std::abs(turns - std::round(turns)) < 1e-6 ? std::round(turns) : turns;
        report.checks.push_back(make_check("det_winding", winding, static_cast<double>(n), 0.0));
    }

    // (d) sigma'(0) is orthogonal to the fiber tangent space at O.
    {
        const Eigen::MatrixXcd velocity = sigma_velocity(n);
        double worst = 0.0;
        for (int k = 0; k < 16; ++k) {
            const Eigen::VectorXd a = traceless_angles(n, 1.0, rng);
            const Eigen::MatrixXcd tangent = Complex(0.0, 1.0) * a.cast<Complex>().asDiagonal().toDenseMatrix();
            worst = std::max(worst, std::abs((velocity * tangent.adjoint()).trace()));
        }
        report.checks.push_back(make_check("fiber_orthogonality", worst, 0.0, 1e-12));
    }

    // (e) Fiber geodesics through O stay in F_0.
    {
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
            const Eigen::MatrixXd frame = random_rotation(n, rng);
            const Eigen::VectorXd a = traceless_angles(n, 1.5, rng);
            for (int j = 0; j <= 20; ++j) {
                const double t = -3.0 + 0.3 * j;
                worst = std::max(worst, std::abs(fiber_point(frame, a, t).determinant() - 1.0));
            }
        }
        report.checks.push_back(make_check("fiber_geodesic_det", worst, 0.0, 1e-10));
    }

    // (f) Near O the preimage of an arc is a Riemannian product with the sigma direction.
    {
        std::uniform_real_distribution<double> shift(-0.5, 0.5);
        double worst = 0.0;
        for (int k = 0; k < 32; ++k) {
            const Eigen::MatrixXcd v0 = fiber_point(random_rotation(n, rng), traceless_angles(n, 0.15, rng));
            const Eigen::MatrixXcd w0 = fiber_point(random_rotation(n, rng), traceless_angles(n, 0.15, rng));
            const double s = shift(rng), t = shift(rng);
            try {
                const double base = coset_distance(cartan_point(v0), cartan_point(w0));
                const double moved = coset_distance(cartan_point(v0 * sigma(s, n)), cartan_point(w0 * sigma(t, n)));
                worst = std::max(worst, std::abs(moved * moved - (base * base + (s - t) * (s - t))));
            } catch (const NumericError&) {
                worst = INFINITY;
            }
        }
        report.checks.push_back(make_check("local_product_metric", worst, 0.0, 1e-6));
    }

    return report;
}

} // namespace lgraph
