#include <lgraph/expr.hpp>

#include <cmath>
#include <vector>

namespace lgraph {

namespace {

struct Derivs
{
    double f, df, d2f;
};

Derivs func_derivs(Func fn, double x)
{
    switch (fn) {
    case Func::sin: return {std::sin(x), std::cos(x), -std::sin(x)};
    case Func::cos: return {std::cos(x), -std::sin(x), -std::cos(x)};
    case Func::tan: {
        const double t = std::tan(x);
        const double sec2 = 1.0 + t * t;
        return {t, sec2, 2.0 * t * sec2};
    }
    case Func::atan: {
        const double q = 1.0 + x * x;
        return {std::atan(x), 1.0 / q, -2.0 * x / (q * q)};
    }
    case Func::exp: {
        const double e = std::exp(x);
        return {e, e, e};
    }
    case Func::log:
        if (!(x > 0.0)) return {NAN, NAN, NAN};
        return {std::log(x), 1.0 / x, -1.0 / (x * x)};
    case Func::sqrt: {
        if (!(x > 0.0)) return {NAN, NAN, NAN};
        const double s = std::sqrt(x);
        return {s, 0.5 / s, -0.25 / (s * x)};
    }
    case Func::cosh: return {std::cosh(x), std::sinh(x), std::cosh(x)};
    case Func::sinh: return {std::sinh(x), std::cosh(x), std::sinh(x)};
    }
    return {NAN, NAN, NAN};
}

// x^p with p constant. Integer exponents are evaluated on the whole real line;
// the derivative coefficients vanish identically where p(p-1) does.
Derivs pow_derivs(double x, double p)
{
    const bool integral = std::nearbyint(p) == p;
    if (!integral && x < 0.0) return {NAN, NAN, NAN};
    if (p == 0.0) return {1.0, 0.0, 0.0};
    const double f = std::pow(x, p);
    const double df = p * std::pow(x, p - 1.0);
    const double d2f = p == 1.0 ? 0.0 : p * (p - 1.0) * std::pow(x, p - 2.0);
    return {f, df, d2f};
}

bool finite(const Eigen::MatrixXd& m) { return m.allFinite(); }

std::vector<double> to_vector(std::span<const double> p) { return {p.begin(), p.end()}; }

void check_point(const Expression& e, std::span<const double> p)
{
    if (static_cast<int>(p.size()) != e.dim())
        throw ArgumentError("point has length " + std::to_string(p.size()) + ", expression dim is "
                            + std::to_string(e.dim()));
}

double eval_value(const Node& n, std::span<const double> p)
{
    double v = 0.0;
    switch (n.kind) {
    case NodeKind::constant: return n.value;
    case NodeKind::variable: return p[n.index];
    case NodeKind::add: v = eval_value(*n.lhs, p) + eval_value(*n.rhs, p); break;
    case NodeKind::sub: v = eval_value(*n.lhs, p) - eval_value(*n.rhs, p); break;
    case NodeKind::mul: v = eval_value(*n.lhs, p) * eval_value(*n.rhs, p); break;
    case NodeKind::div: v = eval_value(*n.lhs, p) / eval_value(*n.rhs, p); break;
    case NodeKind::neg: v = -eval_value(*n.lhs, p); break;
    case NodeKind::pow: v = pow_derivs(eval_value(*n.lhs, p), n.value).f; break;
    case NodeKind::func: v = func_derivs(n.func, eval_value(*n.lhs, p)).f; break;
    }
    if (!std::isfinite(v)) throw DomainError(to_string(n), to_vector(p));
    return v;
}

struct Jet
{
    double v;
    Eigen::VectorXd g;
    Eigen::MatrixXd h;
};

// Chain rule for a scalar function applied to a jet.
Jet compose(const Jet& a, const Derivs& d)
{
    return {d.f, d.df * a.g, d.df * a.h + d.d2f * (a.g * a.g.transpose())};
}

Jet eval(const Node& n, std::span<const double> p)
{
    const auto dim = static_cast<Eigen::Index>(p.size());
    Jet r;
    switch (n.kind) {
    case NodeKind::constant:
        r = {n.value, Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)};
        break;
    case NodeKind::variable:
        r = {p[n.index], Eigen::VectorXd::Unit(dim, n.index), Eigen::MatrixXd::Zero(dim, dim)};
        break;
    case NodeKind::add: {
        Jet a = eval(*n.lhs, p), b = eval(*n.rhs, p);
        r = {a.v + b.v, a.g + b.g, a.h + b.h};
        break;
    }
    case NodeKind::sub: {
        Jet a = eval(*n.lhs, p), b = eval(*n.rhs, p);
        r = {a.v - b.v, a.g - b.g, a.h - b.h};
        break;
    }
    case NodeKind::mul: {
        Jet a = eval(*n.lhs, p), b = eval(*n.rhs, p);
        Eigen::MatrixXd cross = a.g * b.g.transpose();
        r = {a.v * b.v, b.v * a.g + a.v * b.g, b.v * a.h + a.v * b.h + cross + cross.transpose()};
        break;
    }
    case NodeKind::div: {
        Jet a = eval(*n.lhs, p), b = eval(*n.rhs, p);
        const double q = a.v / b.v;
        Eigen::VectorXd g = (a.g - q * b.g) / b.v;
        Eigen::MatrixXd cross = g * b.g.transpose();
        r = {q, g, (a.h - q * b.h - cross - cross.transpose()) / b.v};
        break;
    }
    case NodeKind::neg: {
        Jet a = eval(*n.lhs, p);
        r = {-a.v, -a.g, -a.h};
        break;
    }
    case NodeKind::pow: {
        Jet a = eval(*n.lhs, p);
        r = compose(a, pow_derivs(a.v, n.value));
        break;
    }
    case NodeKind::func: {
        Jet a = eval(*n.lhs, p);
        r = compose(a, func_derivs(n.func, a.v));
        break;
    }
    }
    if (!std::isfinite(r.v) || !finite(r.g) || !finite(r.h)) throw DomainError(to_string(n), to_vector(p));
    return r;
}

} // namespace

double evaluate(const Expression& e, std::span<const double> point)
{
    check_point(e, point);
    return eval_value(e.root(), point);
}

JetValue eval_jet(const Expression& e, std::span<const double> point)
{
    check_point(e, point);
    Jet j = eval(e.root(), point);
    // Stored symmetrically: the lower triangle mirrors the upper one bit for bit.
    Eigen::MatrixXd h = j.h.triangularView<Eigen::Upper>();
    h.triangularView<Eigen::StrictlyLower>() = h.transpose();
    return {j.v, std::move(j.g), std::move(h)};
}

JetValue fd_jet(const Expression& e, std::span<const double> point, double h)
{
    check_point(e, point);
    if (!(h > 0.0)) throw ArgumentError("finite-difference step must be positive");
    const int n = e.dim();
    std::vector<double> x(point.begin(), point.end());
    auto at = [&](int i, double si, int j, double sj) {
        std::vector<double> y = x;
        if (i >= 0) y[i] += si;
        if (j >= 0) y[j] += sj;
        return evaluate(e, y);
    };

    JetValue out;
    out.value = evaluate(e, x);
    out.gradient.resize(n);
    out.hessian.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const double fp = at(i, h, -1, 0.0);
        const double fm = at(i, -h, -1, 0.0);
        out.gradient(i) = (fp - fm) / (2.0 * h);
        out.hessian(i, i) = (fp - 2.0 * out.value + fm) / (h * h);
        for (int j = 0; j < i; ++j) {
            const double v = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4.0 * h * h);
            out.hessian(i, j) = v;
            out.hessian(j, i) = v;
        }
    }
    return out;
}

} // namespace lgraph
