#include "cutloc/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cutloc/errors.hpp"
#include "cutloc/parallel.hpp"
#include "cutloc/quadrature.hpp"

namespace cutloc {

namespace {

template <class F>
double boundary_integral(const BoundaryCurve& curve, F&& per_parameter)
{
    double total = 0.0;
    for (std::size_t i = 0; i < curve.arc_count(); ++i) {
        const Arc& a = curve.arc(i);
        total += quad::integrate([&](double t) { return per_parameter(a, t); }, a.t0(), a.t1());
    }
    return total;
}

// kappa <y, nu> |Y'|
double minkowski_density(const Arc& a, double t)
{
    const Vec2 y = a.position(t), d1 = a.first(t), d2 = a.second(t);
    return cross(d1, d2) * cross(y, d1) / (norm2(d1) * norm(d1));
}

}  // namespace

IntegralReport make_report(std::string name, double lhs, double rhs, std::size_t samples_used)
{
    IntegralReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual / std::max(std::abs(rhs), 1e-14);
    r.samples_used = samples_used;
    return r;
}

double perimeter(const BoundaryCurve& curve)
{
    return boundary_integral(curve, [](const Arc& a, double t) { return norm(a.first(t)); });
}

double area(const BoundaryCurve& curve)
{
    return 0.5 * boundary_integral(curve, [](const Arc& a, double t) { return cross(a.position(t), a.first(t)); });
}

IntegralReport minkowski_residual(const BoundaryCurve& curve)
{
    if (!detect_corners(curve).empty()) throw InapplicableError("curve has corners; use the cornered Minkowski formula");
    IntegralReport r = make_report("minkowski", boundary_integral(curve, minkowski_density), perimeter(curve), 0);
    return r;
}

IntegralReport minkowski_residual_corners(const BoundaryCurve& curve)
{
    const auto js = junctions(curve);
    double corner_sum = 0.0, max_term = 0.0;
    for (const CornerInfo& c : js) {
        if (!c.convex && std::abs(c.turning_angle) > 1e-6)
            throw InapplicableError("concave corner: the cornered Minkowski formula is out of scope");
        const double term = dot(c.position, rot90(c.delta_nu));
        corner_sum += term;
        max_term = std::max(max_term, std::abs(term));
    }
    const double curvature_integral = boundary_integral(curve, minkowski_density);
    IntegralReport r = make_report("minkowski_corners", curvature_integral - corner_sum, perimeter(curve), js.size());
    r.extra["curvature_integral"] = curvature_integral;
    r.extra["corner_sum"] = corner_sum;
    r.extra["max_corner_term"] = max_term;
    return r;
}

CovIntegral cov_integral(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h)
{
    for (const CornerInfo& c : detect_corners(curve))
        if (!c.convex) throw InapplicableError("change of variables is not available with concave corners");
    if (samples.empty()) throw ConfigError("no cut samples");
    std::vector<double> ray(samples.size(), 0.0);
    parallel_for(samples.size(), [&](std::size_t k) {
        const CutSample& c = samples[k];
        if (c.corner_limit) return;
        const Vec2 y = c.point.position, nu = c.point.normal;
        const double kappa = c.point.curvature;
        ray[k] = quad::integrate([&](double t) { return h(y - t * nu) * (1.0 - t * kappa); }, 0.0, c.lambda, 1e-10);
    });
    CovIntegral out;
    double sum = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        sum += ray[k];
        (samples[k].corner_limit ? out.skipped : out.used) += 1;
    }
    out.value = sum * curve.length() / static_cast<double>(samples.size());
    return out;
}

double grid_integral(const DistanceField& field, const Polynomial2& h)
{
    const GridSpec& g = field.grid();
    double sum = 0.0;
    for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            const double w = std::clamp(field.signed_distance(c) / g.h + 0.25, 0.0, 1.0);
            if (w > 0) sum += w * h(g.center(i, j));
        }
    }
    return sum * g.h * g.h;
}

IntegralReport cov_residual(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h,
                            const DistanceField& field)
{
    const CovIntegral ray = cov_integral(curve, samples, h);
    IntegralReport r = make_report("chv[" + h.name() + "]", ray.value, grid_integral(field, h), ray.used);
    r.extra["grid_h"] = field.grid().h;
    r.extra["skipped_rays"] = static_cast<double>(ray.skipped);
    return r;
}

CovConvergence cov_convergence(const BoundaryCurve& curve, std::span<const CutSample> samples, const Polynomial2& h,
                               double h0, std::size_t boundary_samples)
{
    CovConvergence c;
    const DistanceField coarse(curve, GridSpec::with_spacing(curve, h0), boundary_samples);
    c.coarse = cov_residual(curve, samples, h, coarse);
    const DistanceField fine(curve, GridSpec::with_spacing(curve, 0.5 * h0), boundary_samples);
    c.fine = cov_residual(curve, samples, h, fine);
    c.ratio = c.fine.abs_residual / std::max(c.coarse.abs_residual, 1e-300);
    return c;
}

IntegralReport mean_value_identity(const BoundaryCurve& curve, std::span<const CutSample> samples)
{
    if (samples.empty()) throw ConfigError("no cut samples");
    double sum = 0.0;
    for (const CutSample& c : samples) sum += c.phi;
    return make_report("mean_value_phi", sum / static_cast<double>(samples.size()), area(curve) / perimeter(curve),
                       samples.size());
}

}  // namespace cutloc
