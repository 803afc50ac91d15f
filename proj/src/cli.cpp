#include "cutloc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutloc/errors.hpp"
#include "cutloc/json_io.hpp"
#include "cutloc/mk.hpp"
#include "cutloc/pipeline.hpp"
#include "cutloc/shapes.hpp"
#include "cutloc/web.hpp"

namespace cutloc {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string shape_path;
    PipelineConfig pipeline;
    std::string out_dir;
    std::vector<std::string> formats{"csv", "json"};
    double gamma = 1.0;
    std::string op = "laplace";
    std::vector<double> gamma_arc;
    std::optional<std::string> shape_name;
    bool shapes_json = false;

    bool wants(const std::string& f) const { return std::find(formats.begin(), formats.end(), f) != formats.end(); }
};

BoundaryCurve load_shape(const RunConfig& c)
{
    if (c.shape_path.empty()) throw ConfigError("--shape is required");
    std::ifstream in(c.shape_path);
    if (!in) throw ConfigError("cannot open shape file " + c.shape_path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return shapes::from_json_text(text);
}

void write_file(const RunConfig& c, const std::string& name, const std::string& content)
{
    if (c.out_dir.empty()) return;
    std::filesystem::create_directories(c.out_dir);
    std::ofstream f(std::filesystem::path(c.out_dir) / name);
    if (!f) throw ConfigError("cannot write " + name + " in " + c.out_dir);
    f << content;
}

void emit_json(const RunConfig& c, std::ostream& out, const std::string& name, const json& j)
{
    const std::string text = j.dump(2) + "\n";
    out << text;
    if (c.wants("json")) write_file(c, name, text);
}

template <class F>
void emit_csv(const RunConfig& c, const std::string& name, F&& writer)
{
    if (c.out_dir.empty() || !c.wants("csv")) return;
    std::ostringstream os;
    writer(os);
    write_file(c, name, os.str());
}

int cmd_shapes(const RunConfig& c, std::ostream& out)
{
    const auto& cat = shapes::catalog();
    if (c.shape_name) {
        const auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& e) { return e.name == *c.shape_name; });
        if (it == cat.end()) throw ConfigError("unknown shape '" + *c.shape_name + "'");
        out << it->schema.dump(2) << "\n";
        return 0;
    }
    if (c.shapes_json) {
        json arr = json::array();
        for (const auto& e : cat)
            arr.push_back({{"name", e.name}, {"description", e.description}, {"schema", e.schema}, {"example", e.example}});
        out << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : cat) out << e.name << "  " << e.description << "\n";
    return 0;
}

int cmd_report(const RunConfig& c, std::ostream& out)
{
    const Prepared prep(load_shape(c), c.pipeline);
    SymmetryOptions opt;
    opt.tol = prep.tol;
    const SymmetryReport r = criterion_report(prep.curve, prep.cuts, prep.projector, opt);
    emit_csv(c, "samples.csv", [&](std::ostream& os) { write_samples_csv(os, prep.cuts); });
    json j = r;
    j["lambda_lipschitz"] = lambda_lipschitz(prep.curve, prep.cuts);
    j["chain"] = [&] {
        const ChainCheck ch = inequality_chain_check(prep.cuts, r);
        return json{{"holds", ch.holds()}, {"first_failure", ch.first_failure}};
    }();
    emit_json(c, out, "report.json", j);
    return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out)
{
    const Prepared prep(load_shape(c), c.pipeline);
    const auto checks = verify_suite(prep, c.pipeline);
    json arr = json::array();
    bool failed = false;
    for (const Check& k : checks) {
        json j = k.report;
        j["status"] = k.status;
        j["tolerance"] = k.tolerance;
        if (!k.reason.empty()) j["reason"] = k.reason;
        arr.push_back(j);
        failed = failed || k.status == "fail";
    }
    emit_json(c, out, "verify.json", arr);
    return failed ? 1 : 0;
}

int cmd_mk(const RunConfig& c, std::ostream& out)
{
    const Prepared prep(load_shape(c), c.pipeline);
    SymmetryOptions opt;
    opt.tol = prep.tol;
    const MKVerdict verdict = mk_verdict(prep.curve, c.gamma, prep.cuts, prep.projector, opt);
    const DistanceField field(prep.curve, grid_for(prep.curve, c.pipeline), 4096);
    const MKSolution sol = vf_field(prep.curve, field, prep.cuts, SourceField::constant(c.gamma));
    emit_csv(c, "mk_field.csv", [&](std::ostream& os) { sol.write_csv(os); });
    const double h = sol.grid.h;
    const bool nonneg = sol.summary.v_min >= -1e-10;
    const bool compl_ok = sol.summary.complementarity_max <= 5.0 * h * sol.summary.v_max;
    json j{{"summary", sol.summary},
           {"grid_h", h},
           {"boundary_trace", {{"min", verdict.trace_min}, {"max", verdict.trace_max}, {"mean", verdict.trace_mean}}},
           {"verdict", to_string(verdict.report.verdict)},
           {"report", verdict.report},
           {"checks", {{"nonnegative", nonneg}, {"complementarity", compl_ok}}}};
    emit_json(c, out, "mk.json", j);
    return nonneg && compl_ok ? 0 : 1;
}

int cmd_web(const RunConfig& c, std::ostream& out)
{
    const Prepared prep(load_shape(c), c.pipeline);
    const DivergenceOperator op = DivergenceOperator::parse(c.op);
    ArcWindow win{0.0, prep.curve.length()};
    if (!c.gamma_arc.empty()) {
        if (c.gamma_arc.size() != 2) throw ConfigError("--gamma-arc expects start,end");
        win = {c.gamma_arc[0], c.gamma_arc[1]};
    }
    SymmetryOptions opt;
    opt.tol = prep.tol;
    const double eps[] = {0.1, 0.05, 0.025, 0.0125};
    json j{{"operator", op.name()}, {"gamma_arc", {win.start, win.end}}};
    bool ok = true;
    try {
        const Teo10 t = teo10_residual(prep.curve, win, op, prep.cuts, prep.projector, prep.tol);
        const double ts[] = {0.0, t.lambda};
        const WebProfile prof = web_profile(op, t.y0.curvature, t.lambda, ts);
        j["teo10"] = t;
        j["teo10"]["status"] = t.residual <= 1e-4 ? "pass" : "fail";
        j["teo10"]["flux_at_lambda"] = prof.flux[1];
        ok = t.residual <= 1e-4 && std::abs(prof.flux[1]) <= 1e-10;
    } catch (const InapplicableError& e) {
        j["teo10"] = {{"status", "inapplicable"}, {"reason", e.what()}};
        ok = false;
    }
    j["partial_web"] = teopartialweb_check(prep.curve, win, op, eps, prep.cuts, prep.projector, opt);
    emit_json(c, out, "web.json", j);
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Distance-function symmetry toolkit for planar domains", "cutloc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--shape", c.shape_path, "shape definition (JSON)");
    app.add_option("--samples", c.pipeline.samples, "boundary samples")->check(CLI::Range(8, 1 << 22));
    app.add_option("--grid-nx", c.pipeline.grid_nx, "grid columns")->check(CLI::Range(16, 1 << 14));
    app.add_option("--grid-ny", c.pipeline.grid_ny, "grid rows")->check(CLI::Range(16, 1 << 14));
    app.add_option("--margin", c.pipeline.margin, "grid margin (length units)");
    app.add_option("--tol", c.pipeline.tol, "tolerance relative to the diameter, in (0, 1e-2)");
    app.add_option("--out", c.out_dir, "output directory");
    app.add_option("--format", c.formats, "output formats: csv,json")->delimiter(',')->check(CLI::IsMember({"csv", "json"}));

    auto* shapes = app.add_subcommand("shapes", "list the shape catalog");
    shapes->add_option("name", c.shape_name, "show one schema");
    shapes->add_flag("--json", c.shapes_json, "machine-readable catalog");
    auto* report = app.add_subcommand("report", "symmetry criterion report");
    auto* verify = app.add_subcommand("verify", "integral identity suite");
    auto* mk = app.add_subcommand("mk", "mass transport solution and verdict");
    mk->add_option("--gamma", c.gamma, "constant source");
    auto* web = app.add_subcommand("web", "web profile identity");
    web->add_option("--operator", c.op, "laplace or plap:p");
    web->add_option("--gamma-arc", c.gamma_arc, "arclength window start,end")->delimiter(',')->expected(2);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        if (!(c.pipeline.tol > 0 && c.pipeline.tol < 1e-2)) throw ConfigError("--tol must lie in (0, 1e-2)");
        if (*shapes) return cmd_shapes(c, out);
        if (*report) return cmd_report(c, out);
        if (*verify) return cmd_verify(c, out);
        if (*mk) return cmd_mk(c, out);
        if (*web) return cmd_web(c, out);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cutloc
