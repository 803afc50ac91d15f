#include "cutloc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cutloc/distfield.hpp"
#include "cutloc/errors.hpp"
#include "cutloc/symmetry.hpp"

namespace cutloc {

Prepared::Prepared(const BoundaryCurve& c, const PipelineConfig& config)
    : curve(c),
      projector(curve, std::max<std::size_t>(4096, 2 * config.samples)),
      points(resample_arclength(curve, config.samples)),
      tol(config.tol * curve.diameter())
{
    if (!(config.tol > 0 && config.tol < 1e-2)) throw ConfigError("tol must lie in (0, 1e-2)");
    cuts = compute_cut_samples(curve, points, projector, tol);
}

GridSpec grid_for(const BoundaryCurve& curve, const PipelineConfig& config)
{
    return GridSpec::with_counts(curve, config.grid_nx, config.grid_ny, config.margin);
}

namespace {

Check judged(IntegralReport r, double tolerance, bool relative)
{
    Check c;
    c.tolerance = tolerance;
    const double value = relative ? r.rel_residual : r.abs_residual;
    c.status = value <= tolerance ? "pass" : "fail";
    c.report = std::move(r);
    return c;
}

// one-sided bound: the residual is the amount by which lhs exceeds rhs
Check bounded(std::string name, double lhs, double bound, double tolerance, std::size_t n)
{
    Check c;
    c.report = make_report(std::move(name), lhs, bound, n);
    c.report.abs_residual = std::max(0.0, lhs - bound);
    c.report.rel_residual = c.report.abs_residual / std::max(std::abs(bound), 1e-14);
    c.tolerance = tolerance;
    c.status = c.report.abs_residual <= tolerance ? "pass" : "fail";
    return c;
}

Check not_run(std::string name, std::string status, std::string reason)
{
    Check c;
    c.report.name = std::move(name);
    c.status = std::move(status);
    c.reason = std::move(reason);
    return c;
}

}  // namespace

std::vector<Check> verify_suite(const Prepared& prep, const PipelineConfig& config)
{
    const BoundaryCurve& curve = prep.curve;
    const auto corners = detect_corners(curve);
    const bool concave = std::any_of(corners.begin(), corners.end(), [](const CornerInfo& c) { return !c.convex; });
    const bool has_junctions = curve.arc_count() > 1;
    std::vector<Check> out;

    if (corners.empty()) {
        out.push_back(judged(minkowski_residual(curve), 1e-6, true));
    } else {
        out.push_back(not_run("minkowski", "skipped", "curve has corners"));
    }
    if (concave) {
        out.push_back(not_run("minkowski_corners", "out-of-scope", "concave corner present"));
    } else {
        out.push_back(judged(minkowski_residual_corners(curve), 1e-10, false));
    }

    if (concave) {
        out.push_back(not_run("chv[constant]", "skipped", "concave corner present"));
    } else {
        const DistanceField field(curve, grid_for(curve, config), 4096);
        out.push_back(judged(cov_residual(curve, prep.cuts, Polynomial2::constant(1.0), field), 2e-2, true));
    }

    // phi jumps at C1 junctions limit the midpoint rule to first order there
    if (concave) {
        out.push_back(not_run("mean_value_phi", "skipped", "concave corner present"));
    } else {
        out.push_back(judged(mean_value_identity(curve, prep.cuts), has_junctions ? 1e-3 : 1e-5, false));
    }
    out.push_back(bounded("lemma_kd", verify_kd(prep.cuts), 1.0, 1e-6, prep.cuts.size()));

    try {
        const FocalCheck f = focal_check(curve, prep.points, prep.projector, prep.tol);
        IntegralReport r = make_report("focal", f.y0.curvature * f.lambda, 1.0, 1);
        r.extra["kappa_y0"] = f.y0.curvature;
        r.extra["lambda_y0"] = f.lambda;
        out.push_back(judged(r, 1e-3, false));
    } catch (const InapplicableError& e) {
        out.push_back(not_run("focal", "skipped", e.what()));
    }

    if (concave) {
        out.push_back(not_run("basic_bound", "skipped", "concave corner present"));
    } else {
        double m = -std::numeric_limits<double>::infinity();
        for (const CutSample& c : prep.cuts)
            if (!c.corner_limit) m = std::max(m, c.phi * c.point.curvature);
        out.push_back(bounded("basic_bound", m, 0.5, 1e-6, prep.cuts.size()));
    }

    for (int n = 2; n <= 4; ++n) {
        const FMax fm = f_max_bruteforce(n, 200);
        IntegralReport r = make_report("f_max[n=" + std::to_string(n) + "]", fm.value, 1.0 / n, 0);
        out.push_back(judged(r, 1e-4, false));
    }
    return out;
}

}  // namespace cutloc
