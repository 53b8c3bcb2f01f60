#include <lgraph/bernstein.hpp>
#include <lgraph/error.hpp>

#include <algorithm>
#include <cmath>

namespace lgraph {

std::string_view theorem_id(Theorem t) noexcept
{
    switch (t) {
    case Theorem::thm1: return "thm1";
    case Theorem::thm2: return "thm2";
    case Theorem::chern: return "chern";
    case Theorem::tube: return "tube";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view id) noexcept
{
    for (Theorem t : {Theorem::thm1, Theorem::thm2, Theorem::chern, Theorem::tube})
        if (theorem_id(t) == id) return t;
    return std::nullopt;
}

std::string_view relation_symbol(Relation r) noexcept
{
    switch (r) {
    case Relation::le: return "<=";
    case Relation::lt: return "<";
    case Relation::ge: return ">=";
    }
    return "?";
}

Check make_check(std::string name, Relation relation, double measured, double threshold, std::vector<double> witness)
{
    bool pass = false;
    // NaN compares false everywhere, so an undefined measurement never passes.
    switch (relation) {
    case Relation::le: pass = measured <= threshold; break;
    case Relation::lt: pass = measured < threshold; break;
    case Relation::ge: pass = measured >= threshold; break;
    }
    return {std::move(name), relation, measured, threshold, pass, std::move(witness)};
}

TheoremVerdict make_verdict(Theorem theorem, std::vector<Check> hypotheses, std::vector<Check> conclusions,
                            std::vector<std::string> notes)
{
    TheoremVerdict v;
    v.theorem = theorem;
    v.hypothesis_checks = std::move(hypotheses);
    v.conclusion_checks = std::move(conclusions);
    auto passed = [](const Check& c) { return c.pass; };
    v.applicable = std::all_of(v.hypothesis_checks.begin(), v.hypothesis_checks.end(), passed);
    v.consistent = !v.applicable || std::all_of(v.conclusion_checks.begin(), v.conclusion_checks.end(), passed);
    v.notes = std::move(notes);
    return v;
}

double default_pde_constant(double hess_sup_norm) { return 10.0 * (1.0 + hess_sup_norm); }

double pde_threshold(const FieldReport& report, const Thresholds& tol)
{
    const double c = tol.pde_c ? *tol.pde_c : default_pde_constant(report.summaries.hess_sup_norm.value);
    if (!(c >= 0.0)) throw ArgumentError("PDE threshold constant must be nonnegative");
    const double h = report.domain.max_spacing();
    return c * h * h;
}

double beta0_bound(int n)
{
    if (n < 2) throw ArgumentError("beta0_bound requires n >= 2");
    const double kappa = n == 2 ? 1.0 : 2.0;
    return std::pow(std::cos(M_PI / (2.0 * std::sqrt(kappa * n))), -n);
}

double tube_radius(int n) { return n == 2 ? M_PI / 2.0 : M_PI / (2.0 * std::sqrt(2.0)); }

} // namespace lgraph
