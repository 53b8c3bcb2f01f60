#include <lgraph/expr.hpp>

#include <cstdio>
#include <sstream>

namespace lgraph {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("syntax error at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

std::string format_point(const std::vector<double>& p)
{
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << ')';
    return os.str();
}

std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_indices(const Node& n, int dim)
{
    if (n.kind == NodeKind::variable && (n.index < 0 || n.index >= dim))
        throw ArgumentError("variable index out of range in expression");
    if (n.lhs) check_indices(*n.lhs, dim);
    if (n.rhs) check_indices(*n.rhs, dim);
}

} // namespace

DomainError::DomainError(std::string subexpression, std::vector<double> point)
    : Error("domain violation in " + subexpression + " at " + format_point(point)),
      subexpression_(std::move(subexpression)), point_(std::move(point))
{
}

std::string_view func_name(Func f) noexcept
{
    switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::tan: return "tan";
    case Func::atan: return "atan";
    case Func::exp: return "exp";
    case Func::log: return "log";
    case Func::sqrt: return "sqrt";
    case Func::cosh: return "cosh";
    case Func::sinh: return "sinh";
    }
    return "?";
}

bool structurally_equal(const Node& a, const Node& b) noexcept
{
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case NodeKind::constant: return a.value == b.value;
    case NodeKind::variable: return a.index == b.index;
    case NodeKind::neg: return structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::pow: return a.value == b.value && structurally_equal(*a.lhs, *b.lhs);
    case NodeKind::func: return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
    default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

std::string to_string(const Node& n)
{
    switch (n.kind) {
    case NodeKind::constant:
        return n.value < 0 ? "(-" + format_number(-n.value) + ")" : format_number(n.value);
    case NodeKind::variable: return "x" + std::to_string(n.index + 1);
    case NodeKind::neg: return "(-" + to_string(*n.lhs) + ")";
    case NodeKind::pow: return "(" + to_string(*n.lhs) + "^" + format_number(n.value) + ")";
    case NodeKind::func: return std::string(func_name(n.func)) + "(" + to_string(*n.lhs) + ")";
    default: break;
    }
    const char* op = n.kind == NodeKind::add ? " + " : n.kind == NodeKind::sub ? " - " : n.kind == NodeKind::mul ? " * " : " / ";
    return "(" + to_string(*n.lhs) + op + to_string(*n.rhs) + ")";
}

Expression::Expression(int dim, NodePtr root) : dim_(dim), root_(std::move(root))
{
    if (dim_ < 1) throw ArgumentError("expression dimension must be positive");
    if (!root_) throw ArgumentError("expression has no root");
    check_indices(*root_, dim_);
}

std::string Expression::to_string() const { return lgraph::to_string(*root_); }

} // namespace lgraph
