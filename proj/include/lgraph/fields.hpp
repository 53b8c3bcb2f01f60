#pragma once

// Sampling of a Lagrangian graph (x, grad u) over a box, pointwise Gauss-map
// data, and stencil residuals standing in for H-minimality (Delta_g psi = 0)
// and conformal Maslov form (J H = grad_g psi conformal).

#include <lgraph/expr.hpp>
#include <lgraph/grassmann.hpp>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace lgraph {

/// Tensor-product grid on a box. Points are ordered row-major: the last
/// axis varies fastest.
class GridDomain
{
public:
    static constexpr int min_resolution = 5;

    GridDomain(std::vector<double> lower, std::vector<double> upper, std::vector<int> resolution);

    int dim() const noexcept { return static_cast<int>(lower_.size()); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    const std::vector<int>& resolution() const noexcept { return resolution_; }

    double spacing(int axis) const;
    double max_spacing() const;
    std::size_t size() const noexcept { return size_; }
    std::size_t stride(int axis) const { return strides_[axis]; }

    std::vector<int> multi_index(std::size_t flat) const;
    std::size_t flat_index(const std::vector<int>& index) const;
    std::vector<double> point(std::size_t flat) const;
    double coordinate(int axis, int i) const;

    /// True iff every axis index is at least `depth` away from both ends.
    bool is_interior(std::size_t flat, int depth) const;

    friend bool operator==(const GridDomain&, const GridDomain&) = default;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<int> resolution_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 0;
};

/// Stencil depth of every residual field.
inline constexpr int residual_depth = 2;

struct JetGrid
{
    GridDomain domain;
    std::vector<JetValue> jets;
};

/// One real value per grid point; NaN where a field is undefined (boundary layers).
using ScalarGrid = std::vector<double>;

JetGrid sample_domain(const GridDomain& domain, const Expression& e);

struct PointAnalysis
{
    Eigen::MatrixXd hessian;
    Eigen::MatrixXd metric; // I + H^2
    GaussPoint gauss;
    double delta_u = 1.0;         // sqrt(det(I + H^2))
    double delta_u_product = 1.0; // prod sqrt(1 + lambda_k^2)
    double delta_u_secant = 1.0;  // prod sec(theta_k)
    double tube_dev = 0.0;
};

PointAnalysis analyze_point(const JetValue& jet);

/// prod sec(theta_k): volume element of a graph plane with critical angles theta.
double volume_element(const Eigen::VectorXd& thetas);

/// Signed Delta_g psi in divergence form at interior points (depth 2), NaN elsewhere.
ScalarGrid laplace_beltrami_residual(const JetGrid& grid);

/// |H| = |grad_g psi|_g at interior points.
ScalarGrid mean_curvature_norm(const JetGrid& grid);

/// Frobenius norm of the traceless part of L_X g, X = grad_g psi, at interior points.
ScalarGrid cmf_residual(const JetGrid& grid);

struct Extremum
{
    double value = 0.0;
    std::size_t index = 0;
    std::vector<double> point;
};

struct FieldSummaries
{
    Extremum min_eigen;
    Extremum sup_delta_u;
    Extremum sup_tube_dev;
    Extremum sup_hmin_residual;
    Extremum sup_cmf_residual;
    Extremum sup_mean_curv;
    Extremum affinity_residual;
    Extremum isotropy_residual;
    Extremum hess_sup_norm;
};

struct FieldReport
{
    GridDomain domain;
    ScalarGrid psi_field;
    ScalarGrid min_eigen_field;
    ScalarGrid delta_u_field;
    ScalarGrid tube_dev_field;
    ScalarGrid hess_norm_field;
    ScalarGrid affinity_field;
    ScalarGrid isotropy_field;
    ScalarGrid hmin_residual_field; // |Delta_g psi|
    ScalarGrid cmf_residual_field;
    ScalarGrid mean_curvature_norm_field;
    FieldSummaries summaries;
};

FieldReport field_report(const JetGrid& grid);

/// Infimum (`minimum = true`) or supremum over the finite entries of `field`.
Extremum extremum(const GridDomain& domain, const ScalarGrid& field, bool minimum);

/// Grid CSV: header x1..xn,u,g1..gn,h11,h12,..,hnn (upper triangle, row-major),
/// one row per point in grid order. Extra columns are ignored on read.
JetGrid read_grid_csv(std::istream& in, std::optional<int> dim = std::nullopt);
void write_grid_csv(std::ostream& out, const JetGrid& grid, const FieldReport* derived = nullptr);

} // namespace lgraph
