#pragma once

// Executable hypothesis / conclusion checks for the Bernstein-type statements
// on Lagrangian graphs, evaluated on a sampled FieldReport.

#include <lgraph/fields.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lgraph {

enum class Theorem
{
    thm1,  // H-minimal + convex u  =>  affine plane
    thm2,  // CMF + Delta_u <= beta0 < bound  =>  plane
    chern, // H-minimal + bounded Hessian  =>  minimal
    tube   // CMF + simple + Gauss image in the tube  =>  plane
};

std::string_view theorem_id(Theorem t) noexcept;
std::optional<Theorem> parse_theorem(std::string_view id) noexcept;

/// Tolerances for the checks. `pde_c`, when unset, is derived from the report
/// (see default_pde_constant).
struct Thresholds
{
    double eig = 1e-9;
    double affine = 1e-9;
    std::optional<double> pde_c;
    double hess_bound = 100.0;
    double margin = 1e-9;
};

/// C in tau_pde = C h^2 when not overridden: 10 (1 + sup |Hess|_F).
double default_pde_constant(double hess_sup_norm);

/// tau_pde = C h_max^2.
double pde_threshold(const FieldReport& report, const Thresholds& tol);

enum class Relation
{
    le, // measured <= threshold
    lt, // measured <  threshold
    ge  // measured >= threshold
};

std::string_view relation_symbol(Relation r) noexcept;

struct Check
{
    std::string name;
    Relation relation = Relation::le;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::vector<double> witness;
};

Check make_check(std::string name, Relation relation, double measured, double threshold,
                 std::vector<double> witness = {});

struct TheoremVerdict
{
    Theorem theorem = Theorem::thm1;
    std::vector<Check> hypothesis_checks;
    std::vector<Check> conclusion_checks;
    bool applicable = false;
    bool consistent = true;
    std::vector<std::string> notes;
};

/// Fills `applicable` and `consistent` from the check lists.
TheoremVerdict make_verdict(Theorem theorem, std::vector<Check> hypotheses, std::vector<Check> conclusions,
                            std::vector<std::string> notes = {});

/// cos^{-n}(pi / (2 sqrt(kappa n))), kappa = 1 for n = 2 and 2 for n >= 3.
double beta0_bound(int n);

/// Radius of the admissible tube around sigma: pi/2 for n = 2, pi/(2 sqrt 2) otherwise.
double tube_radius(int n);

TheoremVerdict check_theorem1(const FieldReport& report, const Thresholds& tol = {});
TheoremVerdict check_theorem2(const FieldReport& report, std::optional<double> beta0, const Thresholds& tol = {});
TheoremVerdict check_chern(const FieldReport& report, const Thresholds& tol = {});
TheoremVerdict check_tube(const FieldReport& report, const Thresholds& tol = {});

TheoremVerdict check(Theorem theorem, const FieldReport& report, std::optional<double> beta0,
                     const Thresholds& tol = {});

} // namespace lgraph
