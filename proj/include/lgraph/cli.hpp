#pragma once

#include <lgraph/bernstein.hpp>
#include <lgraph/expr.hpp>
#include <lgraph/fields.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lgraph {

/// Built-in example surfaces.
struct ExampleId
{
    enum class Kind
    {
        affine,   // a.x + (c/2)|x|^2
        quad_iso, // (c/2)|x|^2
        saddle,   // (x1^2 - x2^2)/2, dim 2 only
        quartic   // sum x_k^4
    };

    Kind kind = Kind::quartic;
    std::vector<double> a{1.0}; // affine slope, one entry broadcast to every axis
    double c = 1.0;
};

/// Parses "saddle", "quartic", "quad-iso", "quad-iso(c)", "affine", "affine(a,c)".
ExampleId parse_example_id(const std::string& text);

struct GeneratedExample
{
    std::string text;
    Expression expression;
    GridDomain domain; // [-1, 1]^n, 41 points per axis
};

GeneratedExample generate_example(const ExampleId& id, int dim);

/// Command-line entry point. Exit codes: 0 success, 1 some verdict applicable
/// but inconsistent (or a failed self-test), 2 usage or configuration error,
/// 3 numeric or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lgraph
