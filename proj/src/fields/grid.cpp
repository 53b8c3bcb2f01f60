#include <lgraph/error.hpp>
#include <lgraph/fields.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lgraph {

GridDomain::GridDomain(std::vector<double> lower, std::vector<double> upper, std::vector<int> resolution)
    : lower_(std::move(lower)), upper_(std::move(upper)), resolution_(std::move(resolution))
{
    const auto n = lower_.size();
    if (n == 0) throw ArgumentError("grid dimension must be positive");
    if (upper_.size() != n || resolution_.size() != n) throw ArgumentError("grid bounds and resolution lengths differ");
    for (std::size_t k = 0; k < n; ++k) {
        if (!std::isfinite(lower_[k]) || !std::isfinite(upper_[k]) || !(upper_[k] > lower_[k])) {
            std::ostringstream os;
            os << "grid axis " << k + 1 << ": upper bound must exceed lower bound";
            throw ArgumentError(os.str());
        }
        if (resolution_[k] < min_resolution) {
            std::ostringstream os;
            os << "grid axis " << k + 1 << ": resolution " << resolution_[k] << " is below the minimum of "
               << min_resolution;
            throw ArgumentError(os.str());
        }
    }
    strides_.assign(n, 1);
    for (std::size_t k = n - 1; k > 0; --k) strides_[k - 1] = strides_[k] * static_cast<std::size_t>(resolution_[k]);
    size_ = strides_[0] * static_cast<std::size_t>(resolution_[0]);
}

double GridDomain::spacing(int axis) const
{
    return (upper_[axis] - lower_[axis]) / (resolution_[axis] - 1);
}

double GridDomain::max_spacing() const
{
    double h = 0.0;
    for (int k = 0; k < dim(); ++k) h = std::max(h, spacing(k));
    return h;
}

std::vector<int> GridDomain::multi_index(std::size_t flat) const
{
    std::vector<int> idx(lower_.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        idx[k] = static_cast<int>(flat / strides_[k]);
        flat %= strides_[k];
    }
    return idx;
}

std::size_t GridDomain::flat_index(const std::vector<int>& index) const
{
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) flat += static_cast<std::size_t>(index[k]) * strides_[k];
    return flat;
}

double GridDomain::coordinate(int axis, int i) const
{
    // Exact at both ends and at dyadic fractions of the box.
    return lower_[axis] + (upper_[axis] - lower_[axis]) * i / (resolution_[axis] - 1);
}

std::vector<double> GridDomain::point(std::size_t flat) const
{
    const auto idx = multi_index(flat);
    std::vector<double> p(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) p[k] = coordinate(static_cast<int>(k), idx[k]);
    return p;
}

bool GridDomain::is_interior(std::size_t flat, int depth) const
{
    for (std::size_t k = 0; k < lower_.size(); ++k) {
        const int i = static_cast<int>(flat / strides_[k]);
        flat %= strides_[k];
        if (i < depth || i > resolution_[k] - 1 - depth) return false;
    }
    return true;
}

JetGrid sample_domain(const GridDomain& domain, const Expression& e)
{
    if (e.dim() != domain.dim())
        throw ArgumentError("expression dimension " + std::to_string(e.dim()) + " does not match grid dimension "
                            + std::to_string(domain.dim()));
    JetGrid grid{domain, {}};
    grid.jets.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) grid.jets.push_back(eval_jet(e, domain.point(i)));
    return grid;
}

} // namespace lgraph
