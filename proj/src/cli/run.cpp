#include <lgraph/cli.hpp>
#include <lgraph/error.hpp>
#include <lgraph/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace lgraph {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_inconsistent = 1;
constexpr int exit_usage = 2;
constexpr int exit_numeric = 3;

struct RunConfig
{
    std::string command;
    std::vector<std::string> theorems;
    std::string expr;
    std::string input;
    int dim = 0;
    std::vector<double> box;
    std::vector<int> res;
    Thresholds tol;
    std::optional<double> beta0;
    std::optional<double> pde_c; // unset: derive from the report
    std::string out;
    std::string format = "json";
    std::string example;
    std::vector<double> example_a;
    std::optional<double> example_c;
};

GridDomain domain_from(const RunConfig& cfg)
{
    const int n = cfg.dim;
    std::vector<double> lower(n, -1.0), upper(n, 1.0);
    if (!cfg.box.empty()) {
        if (cfg.box.size() == 2) {
            lower.assign(n, cfg.box[0]);
            upper.assign(n, cfg.box[1]);
        } else if (cfg.box.size() == static_cast<std::size_t>(2 * n)) {
            for (int k = 0; k < n; ++k) {
                lower[k] = cfg.box[2 * k];
                upper[k] = cfg.box[2 * k + 1];
            }
        } else {
            throw ArgumentError("--box takes 2 values (uniform) or 2*dim values (lower,upper per axis)");
        }
    }
    std::vector<int> res(n, 41);
    if (!cfg.res.empty()) {
        if (cfg.res.size() == 1)
            res.assign(n, cfg.res[0]);
        else if (cfg.res.size() == static_cast<std::size_t>(n))
            res = cfg.res;
        else
            throw ArgumentError("--res takes 1 value (uniform) or dim values");
    }
    return GridDomain(lower, upper, res);
}

JetGrid load_grid(RunConfig& cfg)
{
    if (cfg.expr.empty() == cfg.input.empty()) throw ArgumentError("exactly one of --expr and --input is required");
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) throw ArgumentError("cannot open input grid '" + cfg.input + "'");
        JetGrid grid = read_grid_csv(in, cfg.dim > 0 ? std::optional<int>(cfg.dim) : std::nullopt);
        cfg.dim = grid.domain.dim();
        return grid;
    }
    if (cfg.dim < 1) throw ArgumentError("--dim is required with --expr");
    const Expression e = parse(cfg.expr, cfg.dim);
    return sample_domain(domain_from(cfg), e);
}

Json config_json(const RunConfig& cfg, const GridDomain* domain, const FieldReport* report)
{
    Json j;
    j["command"] = cfg.command;
    if (cfg.command == "check") j["theorems"] = cfg.theorems;
    if (cfg.command == "analyze" || cfg.command == "check") {
        j["expression"] = cfg.expr.empty() ? Json(nullptr) : Json(cfg.expr);
        j["input"] = cfg.input.empty() ? Json(nullptr) : Json(cfg.input);
    }
    j["dim"] = cfg.dim;
    if (domain) {
        j["box"] = {{"lower", reals(domain->lower())}, {"upper", reals(domain->upper())}};
        j["resolution"] = domain->resolution();
    }
    if (report) {
        Json t;
        t["eig"] = real(cfg.tol.eig);
        t["affine"] = real(cfg.tol.affine);
        t["pde_c"] = real(cfg.tol.pde_c ? *cfg.tol.pde_c : default_pde_constant(report->summaries.hess_sup_norm.value));
        t["tau_pde"] = real(pde_threshold(*report, cfg.tol));
        t["hess_bound"] = real(cfg.tol.hess_bound);
        t["margin"] = real(cfg.tol.margin);
        j["thresholds"] = std::move(t);
        if (cfg.command == "check") j["beta0"] = cfg.beta0 ? real(*cfg.beta0) : Json(nullptr);
    }
    j["format"] = cfg.format;
    return j;
}

Json document(Json config, Json summaries, Json verdicts, std::vector<std::string> notes)
{
    Json j;
    j["config"] = std::move(config);
    j["field_summaries"] = std::move(summaries);
    j["verdicts"] = std::move(verdicts);
    j["notes"] = std::move(notes);
    return j;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) throw ArgumentError("cannot open output file '" + cfg.out + "'");
    file << text;
}

int run_analyze(RunConfig& cfg, std::ostream& out)
{
    const JetGrid grid = load_grid(cfg);
    const FieldReport report = field_report(grid);
    if (cfg.format == "csv") {
        std::ostringstream os;
        write_grid_csv(os, grid, &report);
        emit(cfg, os.str(), out);
        return exit_ok;
    }
    Json doc = document(config_json(cfg, &grid.domain, &report), to_json(report.summaries), Json::array(),
                        {"reals are rounded to 12 significant digits"});
    emit(cfg, doc.dump(2) + "\n", out);
    return exit_ok;
}

int run_check(RunConfig& cfg, std::ostream& out)
{
    if (cfg.format != "json") throw ArgumentError("check reports are JSON only");
    std::vector<Theorem> theorems;
    for (const std::string& id : cfg.theorems) {
        if (id == "all") {
            theorems = {Theorem::thm1, Theorem::thm2, Theorem::chern, Theorem::tube};
            break;
        }
        const auto t = parse_theorem(id);
        if (!t) throw ArgumentError("unknown theorem '" + id + "' (expected thm1, thm2, chern, tube or all)");
        theorems.push_back(*t);
    }
    const JetGrid grid = load_grid(cfg);
    const FieldReport report = field_report(grid);
    Json verdicts = Json::array();
    bool inconsistent = false;
    for (Theorem t : theorems) {
        const TheoremVerdict v = check(t, report, cfg.beta0, cfg.tol);
        inconsistent = inconsistent || (v.applicable && !v.consistent);
        verdicts.push_back(to_json(v));
    }
    Json doc = document(config_json(cfg, &grid.domain, &report), to_json(report.summaries), std::move(verdicts),
                        {"reals are rounded to 12 significant digits"});
    emit(cfg, doc.dump(2) + "\n", out);
    return inconsistent ? exit_inconsistent : exit_ok;
}

int run_selftest(RunConfig& cfg, std::ostream& out)
{
    const SelfTestReport r = submersion_selftest(cfg.dim);
    Json doc = document(config_json(cfg, nullptr, nullptr), nullptr, Json::array(),
                        {"reals are rounded to 12 significant digits"});
    doc["selftest"] = to_json(r);
    // Keep "notes" last.
    Json notes = doc["notes"];
    doc.erase("notes");
    doc["notes"] = std::move(notes);
    emit(cfg, doc.dump(2) + "\n", out);
    return r.all_pass() ? exit_ok : exit_inconsistent;
}

int run_generate(RunConfig& cfg, std::ostream& out)
{
    ExampleId id = parse_example_id(cfg.example);
    if (!cfg.example_a.empty()) {
        if (id.kind != ExampleId::Kind::affine) throw ArgumentError("--a applies to the affine example only");
        id.a = cfg.example_a;
    }
    if (cfg.example_c) {
        if (id.kind != ExampleId::Kind::affine && id.kind != ExampleId::Kind::quad_iso)
            throw ArgumentError("--c applies to the affine and quad-iso examples only");
        id.c = *cfg.example_c;
    }
    const GeneratedExample ex = generate_example(id, cfg.dim);
    Json j;
    j["config"] = config_json(cfg, nullptr, nullptr);
    j["example"] = cfg.example;
    j["expression"] = ex.text;
    j["box"] = {{"lower", reals(ex.domain.lower())}, {"upper", reals(ex.domain.upper())}};
    j["resolution"] = ex.domain.resolution();
    emit(cfg, j.dump(2) + "\n", out);
    return exit_ok;
}

void add_grid_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--expr", cfg.expr, "u(x1..xn) as text");
    cmd->add_option("--input", cfg.input, "precomputed jet grid (CSV)");
    cmd->add_option("--dim", cfg.dim, "number of variables")->check(CLI::PositiveNumber);
    cmd->add_option("--box", cfg.box, "lo,hi (uniform) or lo1,hi1,...,lon,hin")->delimiter(',')->allow_extra_args(false);
    cmd->add_option("--res", cfg.res, "points per axis (uniform or per axis)")->delimiter(',')->allow_extra_args(false);
    cmd->add_option("--out", cfg.out, "write the report to a file instead of stdout");
    cmd->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol-eig", cfg.tol.eig, "convexity tolerance on min eigenvalue");
    cmd->add_option("--tol-affine", cfg.tol.affine, "tolerance on affinity and isotropy residuals");
    cmd->add_option("--pde-c", cfg.pde_c, "constant C in tau_pde = C h^2");
    cmd->add_option("--hess-bound", cfg.tol.hess_bound, "bound on sup |Hess u|_F (simpleness proxy)");
    cmd->add_option("--margin", cfg.tol.margin, "margin for strict inequalities");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Gauss-map analysis and Bernstein-type checks for Lagrangian graphs (x, grad u)", "lgraph"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "sample u on a grid and emit the field report");
    add_grid_options(analyze, cfg);

    auto* check_cmd = app.add_subcommand("check", "evaluate theorem hypotheses and conclusions");
    check_cmd->add_option("theorems", cfg.theorems, "thm1 | thm2 | chern | tube | all")->required();
    add_grid_options(check_cmd, cfg);
    check_cmd->add_option("--beta0", cfg.beta0, "Delta_u bound for thm2 (default: the sharp bound minus margin)");

    auto* selftest = app.add_subcommand("selftest", "numerical checks of the det fibration");
    selftest->add_option("--dim", cfg.dim, "dimension n in [2, 5]")->required();
    selftest->add_option("--out", cfg.out, "write the report to a file instead of stdout");

    auto* generate = app.add_subcommand("generate", "emit a built-in example surface");
    generate->add_option("example", cfg.example, "affine | quad-iso | saddle | quartic, optionally with (params)")
        ->required();
    generate->add_option("--dim", cfg.dim, "number of variables")->required();
    generate->add_option("--a", cfg.example_a, "affine slope (one value or dim values)")->delimiter(',');
    generate->add_option("--c", cfg.example_c, "quadratic coefficient");
    generate->add_option("--out", cfg.out, "write the output to a file instead of stdout");

    std::vector<const char*> argv{"lgraph"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_ok;
        }
        err << "lgraph: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        cfg.tol.pde_c = cfg.pde_c;
        if (*analyze) {
            cfg.command = "analyze";
            return run_analyze(cfg, out);
        }
        if (*check_cmd) {
            cfg.command = "check";
            return run_check(cfg, out);
        }
        if (*selftest) {
            cfg.command = "selftest";
            return run_selftest(cfg, out);
        }
        cfg.command = "generate";
        return run_generate(cfg, out);
    } catch (const ParseError& e) {
        err << "lgraph: " << e.what() << "\n";
        return exit_usage;
    } catch (const ArgumentError& e) {
        err << "lgraph: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "lgraph: " << e.what() << "\n";
        return exit_numeric;
    } catch (const NumericError& e) {
        err << "lgraph: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::exception& e) {
        err << "lgraph: " << e.what() << "\n";
        return exit_numeric;
    }
}

} // namespace lgraph
