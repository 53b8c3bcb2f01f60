#include <lgraph/error.hpp>
#include <lgraph/fields.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace lgraph {

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        cell.erase(0, cell.find_first_not_of(" \t\r"));
        cell.erase(cell.find_last_not_of(" \t\r") + 1);
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != cell.size() || !std::isfinite(v))
        throw ArgumentError("grid CSV row " + std::to_string(row) + ", column " + column + ": invalid number '"
                            + cell + "'");
    return v;
}

std::string hess_column(int i, int j) { return "h" + std::to_string(i + 1) + std::to_string(j + 1); }

std::string format(double v, int precision)
{
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

} // namespace

void write_grid_csv(std::ostream& out, const JetGrid& grid, const FieldReport* derived)
{
    const int n = grid.domain.dim();
    const int precision = 12;
    std::vector<std::string> header;
    for (int k = 0; k < n; ++k) header.push_back("x" + std::to_string(k + 1));
    header.push_back("u");
    for (int k = 0; k < n; ++k) header.push_back("g" + std::to_string(k + 1));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) header.push_back(hess_column(i, j));
    if (derived)
        for (const char* name : {"psi", "delta_u", "tube_dev", "min_eigen", "hess_norm", "affinity", "isotropy",
                                 "hmin_residual", "cmf_residual", "mean_curvature"})
            header.emplace_back(name);
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';

    for (std::size_t p = 0; p < grid.domain.size(); ++p) {
        const JetValue& jet = grid.jets[p];
        std::vector<double> row = grid.domain.point(p);
        row.push_back(jet.value);
        for (int k = 0; k < n; ++k) row.push_back(jet.gradient(k));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) row.push_back(jet.hessian(i, j));
        if (derived) {
            const FieldReport& r = *derived;
            for (const ScalarGrid* f : {&r.psi_field, &r.delta_u_field, &r.tube_dev_field, &r.min_eigen_field,
                                        &r.hess_norm_field, &r.affinity_field, &r.isotropy_field,
                                        &r.hmin_residual_field, &r.cmf_residual_field, &r.mean_curvature_norm_field})
                row.push_back((*f)[p]);
        }
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format(row[c], precision);
        out << '\n';
    }
}

JetGrid read_grid_csv(std::istream& in, std::optional<int> dim)
{
    std::string line;
    if (!std::getline(in, line)) throw ArgumentError("grid CSV is empty");
    const auto header = split(line);
    std::map<std::string, std::size_t> column;
    for (std::size_t c = 0; c < header.size(); ++c) column.emplace(header[c], c);

    int n = 0;
    while (column.count("x" + std::to_string(n + 1))) ++n;
    if (n == 0) throw ArgumentError("grid CSV header has no x1 column");
    if (dim && *dim != n)
        throw ArgumentError("grid CSV has " + std::to_string(n) + " coordinates, expected " + std::to_string(*dim));

    auto require = [&](const std::string& name) {
        auto it = column.find(name);
        if (it == column.end()) throw ArgumentError("grid CSV header is missing column " + name);
        return it->second;
    };
    std::vector<std::size_t> xs, gs;
    for (int k = 0; k < n; ++k) {
        xs.push_back(require("x" + std::to_string(k + 1)));
        gs.push_back(require("g" + std::to_string(k + 1)));
    }
    const std::size_t ucol = require("u");
    std::vector<std::vector<std::size_t>> hs(n, std::vector<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) hs[i][j] = require(hess_column(i, j));

    std::vector<std::vector<double>> points;
    std::vector<JetValue> jets;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split(line);
        if (cells.size() < header.size())
            throw ArgumentError("grid CSV row " + std::to_string(row) + " has too few columns");
        auto get = [&](std::size_t c) { return parse_cell(cells[c], row, header[c]); };
        std::vector<double> x(n);
        JetValue jet;
        jet.gradient.resize(n);
        jet.hessian.resize(n, n);
        for (int k = 0; k < n; ++k) {
            x[k] = get(xs[k]);
            jet.gradient(k) = get(gs[k]);
        }
        jet.value = get(ucol);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) jet.hessian(i, j) = jet.hessian(j, i) = get(hs[i][j]);
        points.push_back(std::move(x));
        jets.push_back(std::move(jet));
    }
    if (points.empty()) throw ArgumentError("grid CSV has no data rows");

    std::vector<double> lower(n), upper(n);
    std::vector<int> res(n);
    for (int k = 0; k < n; ++k) {
        std::vector<double> values;
        for (const auto& p : points) values.push_back(p[k]);
        std::sort(values.begin(), values.end());
        lower[k] = values.front();
        upper[k] = values.back();
        const double tol = 1e-9 * std::max(1.0, upper[k] - lower[k]);
        int distinct = 1;
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] - values[i - 1] > tol) ++distinct;
        res[k] = distinct;
    }
    GridDomain domain(lower, upper, res);
    if (domain.size() != points.size())
        throw ArgumentError("grid CSV rows do not form a full tensor grid (" + std::to_string(points.size())
                            + " rows, expected " + std::to_string(domain.size()) + ")");
    for (std::size_t p = 0; p < points.size(); ++p) {
        const auto expected = domain.point(p);
        for (int k = 0; k < n; ++k) {
            const double tol = 1e-9 * std::max(1.0, upper[k] - lower[k]);
            if (std::abs(points[p][k] - expected[k]) > tol)
                throw ArgumentError("grid CSV row " + std::to_string(p + 2)
                                    + " is out of grid order or not uniformly spaced");
        }
    }
    return {std::move(domain), std::move(jets)};
}

} // namespace lgraph
