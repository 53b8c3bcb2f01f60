#include <lgraph/report.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lgraph {

Json real(double v)
{
    if (!std::isfinite(v)) return nullptr;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", report_digits, v);
    const double rounded = std::strtod(buf, nullptr);
    return rounded == 0.0 ? 0.0 : rounded; // no "-0.0" in reports
}

Json reals(const std::vector<double>& v)
{
    Json arr = Json::array();
    for (double x : v) arr.push_back(real(x));
    return arr;
}

Json to_json(const Extremum& e)
{
    Json j;
    j["value"] = real(e.value);
    j["witness"] = reals(e.point);
    return j;
}

Json to_json(const FieldSummaries& s)
{
    Json j;
    j["min_eigen"] = to_json(s.min_eigen);
    j["sup_delta_u"] = to_json(s.sup_delta_u);
    j["sup_tube_dev"] = to_json(s.sup_tube_dev);
    j["sup_hmin_residual"] = to_json(s.sup_hmin_residual);
    j["sup_cmf_residual"] = to_json(s.sup_cmf_residual);
    j["sup_mean_curv"] = to_json(s.sup_mean_curv);
    j["affinity_residual"] = to_json(s.affinity_residual);
    j["isotropy_residual"] = to_json(s.isotropy_residual);
    j["hess_sup_norm"] = to_json(s.hess_sup_norm);
    return j;
}

Json to_json(const Check& c)
{
    Json j;
    j["name"] = c.name;
    j["measured"] = real(c.measured);
    j["relation"] = std::string(relation_symbol(c.relation));
    j["threshold"] = real(c.threshold);
    j["pass"] = c.pass;
    j["witness"] = reals(c.witness);
    return j;
}

Json to_json(const TheoremVerdict& v)
{
    Json j;
    j["theorem"] = std::string(theorem_id(v.theorem));
    j["hypothesis_checks"] = Json::array();
    for (const Check& c : v.hypothesis_checks) j["hypothesis_checks"].push_back(to_json(c));
    j["conclusion_checks"] = Json::array();
    for (const Check& c : v.conclusion_checks) j["conclusion_checks"].push_back(to_json(c));
    j["applicable"] = v.applicable;
    j["consistent"] = v.consistent;
    j["notes"] = v.notes;
    return j;
}

Json to_json(const SelfTestReport& r)
{
    Json j;
    j["dim"] = r.dim;
    j["checks"] = Json::array();
    for (const SelfTestCheck& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["measured"] = real(c.measured);
        cj["expected"] = real(c.expected);
        cj["tolerance"] = real(c.tolerance);
        cj["pass"] = c.pass;
        j["checks"].push_back(std::move(cj));
    }
    j["all_pass"] = r.all_pass();
    return j;
}

} // namespace lgraph
