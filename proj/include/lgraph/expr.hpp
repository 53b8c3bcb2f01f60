#pragma once

// Scalar functions u: R^n -> R parsed from text, with exact second-order jets.
//
// Grammar (standard precedence, power binds tightest and is right-associative):
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?          exponent must fold to a constant
//   atom    := number | 'pi' | 'x'<k> | func '(' sum ')' | '(' sum ')'
//
// Variables are x1..x<dim>. Functions: sin cos tan atan exp log sqrt cosh sinh.

#include <lgraph/error.hpp>

#include <Eigen/Dense>

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace lgraph {

enum class NodeKind
{
    constant,
    variable,
    add,
    sub,
    mul,
    div,
    neg,
    pow,
    func
};

enum class Func
{
    sin,
    cos,
    tan,
    atan,
    exp,
    log,
    sqrt,
    cosh,
    sinh
};

std::string_view func_name(Func f) noexcept;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable AST node. `value` holds the literal for constants and the
/// exponent for pow nodes; `index` is the 0-based variable index.
struct Node
{
    NodeKind kind = NodeKind::constant;
    double value = 0.0;
    int index = 0;
    Func func = Func::sin;
    NodePtr lhs;
    NodePtr rhs;
};

bool structurally_equal(const Node& a, const Node& b) noexcept;

class Expression
{
public:
    Expression(int dim, NodePtr root);

    int dim() const noexcept { return dim_; }
    const Node& root() const noexcept { return *root_; }
    const NodePtr& root_ptr() const noexcept { return root_; }

    /// Canonical fully parenthesized text; parse(to_string(), dim) reproduces the AST.
    std::string to_string() const;

    friend bool operator==(const Expression& a, const Expression& b) noexcept
    {
        return a.dim_ == b.dim_ && structurally_equal(*a.root_, *b.root_);
    }

private:
    int dim_;
    NodePtr root_;
};

std::string to_string(const Node& node);

Expression parse(std::string_view text, int dim);

/// Value, gradient and symmetric Hessian of u at a point.
struct JetValue
{
    double value = 0.0;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
};

/// Plain value evaluation (no derivatives).
double evaluate(const Expression& e, std::span<const double> point);

/// Exact second-order jet by forward propagation through the AST.
JetValue eval_jet(const Expression& e, std::span<const double> point);

/// Central-difference jet. Test oracle only; the analysis path never uses it.
JetValue fd_jet(const Expression& e, std::span<const double> point, double h);

} // namespace lgraph
