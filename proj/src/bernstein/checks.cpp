#include <lgraph/bernstein.hpp>
#include <lgraph/error.hpp>

#include <cstdio>

namespace lgraph {

namespace {

const char* const global_note =
    "hypotheses quantify over all of R^n; measurements cover a bounded box, so verdicts are consistency "
    "diagnostics, not proofs";

std::vector<std::string> base_notes() { return {global_note}; }

Check summary_check(std::string name, Relation rel, const Extremum& e, double threshold)
{
    return make_check(std::move(name), rel, e.value, threshold, e.point);
}

std::vector<Check> plane_conclusions(const FieldReport& r, const Thresholds& tol)
{
    return {summary_check("affinity", Relation::le, r.summaries.affinity_residual, tol.affine),
            summary_check("isotropy", Relation::le, r.summaries.isotropy_residual, tol.affine)};
}

void validate(const Thresholds& tol)
{
    if (!(tol.eig >= 0.0) || !(tol.affine >= 0.0) || !(tol.margin >= 0.0) || !(tol.hess_bound >= 0.0))
        throw ArgumentError("tolerances must be nonnegative");
}

void note_failed_conclusion(TheoremVerdict& v)
{
    if (v.applicable && !v.consistent)
        v.notes.emplace_back("conclusion fails on the sampled box; the theorem only forbids this for graphs over all "
                             "of R^n satisfying the hypotheses globally");
}

} // namespace

TheoremVerdict check_theorem1(const FieldReport& r, const Thresholds& tol)
{
    validate(tol);
    const double tau = pde_threshold(r, tol);
    std::vector<Check> hyps{summary_check("convexity", Relation::ge, r.summaries.min_eigen, -tol.eig),
                            summary_check("h_minimal", Relation::le, r.summaries.sup_hmin_residual, tau)};
    std::vector<Check> concl{summary_check("affinity", Relation::le, r.summaries.affinity_residual, tol.affine)};
    auto notes = base_notes();
    if (r.summaries.min_eigen.value >= -tol.eig && r.summaries.min_eigen.value <= tol.eig)
        notes.emplace_back("Hessian is only positive semidefinite at the witness point; convexity is accepted");
    auto v = make_verdict(Theorem::thm1, std::move(hyps), std::move(concl), std::move(notes));
    note_failed_conclusion(v);
    return v;
}

TheoremVerdict check_theorem2(const FieldReport& r, std::optional<double> beta0, const Thresholds& tol)
{
    validate(tol);
    const int n = r.domain.dim();
    const double bound = beta0_bound(n);
    const double b = beta0 ? *beta0 : bound - tol.margin;
    if (!(b < bound)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "beta0 = %.12g must be strictly below the bound %.12g for n = %d", b, bound, n);
        throw ArgumentError(msg);
    }
    const double tau = pde_threshold(r, tol);
    std::vector<Check> hyps{summary_check("delta_u_bound", Relation::le, r.summaries.sup_delta_u, b),
                            make_check("beta0_below_bound", Relation::lt, b, bound),
                            summary_check("conformal_maslov", Relation::le, r.summaries.sup_cmf_residual, tau)};
    auto v = make_verdict(Theorem::thm2, std::move(hyps), plane_conclusions(r, tol), base_notes());
    note_failed_conclusion(v);
    return v;
}

TheoremVerdict check_chern(const FieldReport& r, const Thresholds& tol)
{
    validate(tol);
    const double tau = pde_threshold(r, tol);
    std::vector<Check> hyps{summary_check("bounded_hessian", Relation::le, r.summaries.hess_sup_norm, tol.hess_bound),
                            summary_check("h_minimal", Relation::le, r.summaries.sup_hmin_residual, tau)};
    std::vector<Check> concl{summary_check("minimal", Relation::le, r.summaries.sup_mean_curv, tau)};
    auto v = make_verdict(Theorem::chern, std::move(hyps), std::move(concl), base_notes());
    note_failed_conclusion(v);
    return v;
}

TheoremVerdict check_tube(const FieldReport& r, const Thresholds& tol)
{
    validate(tol);
    const double tau = pde_threshold(r, tol);
    const double radius = tube_radius(r.domain.dim());
    std::vector<Check> hyps{summary_check("tube", Relation::lt, r.summaries.sup_tube_dev, radius - tol.margin),
                            summary_check("conformal_maslov", Relation::le, r.summaries.sup_cmf_residual, tau),
                            summary_check("bounded_hessian", Relation::le, r.summaries.hess_sup_norm, tol.hess_bound)};
    auto v = make_verdict(Theorem::tube, std::move(hyps), plane_conclusions(r, tol), base_notes());
    note_failed_conclusion(v);
    return v;
}

TheoremVerdict check(Theorem theorem, const FieldReport& report, std::optional<double> beta0, const Thresholds& tol)
{
    switch (theorem) {
    case Theorem::thm1: return check_theorem1(report, tol);
    case Theorem::thm2: return check_theorem2(report, beta0, tol);
    case Theorem::chern: return check_chern(report, tol);
    case Theorem::tube: return check_tube(report, tol);
    }
    throw ArgumentError("unknown theorem");
}

} // namespace lgraph
