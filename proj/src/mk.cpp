#include "cutloc/mk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "cutloc/errors.hpp"
#include "cutloc/format.hpp"
#include "cutloc/parallel.hpp"
#include "cutloc/quadrature.hpp"

namespace cutloc {

namespace {

double ray_integral(const SourceField& f, Vec2 x, Vec2 nu, double d, double kappa, double tau)
{
    if (tau <= 0) return 0.0;
    const double denom = 1.0 - d * kappa;
    if (denom <= 1e-12) throw DegenerateRayError("normal chart degenerates: 1 - d kappa <= 1e-12");
    double c = 0.0;
    if (f.is_constant(&c)) {
        // closed form of the same integral
        return c * (tau - 0.5 * kappa * ((d + tau) * (d + tau) - d * d)) / denom;
    }
    return quad::integrate([&](double t) { return f(x - t * nu) * (1.0 - (d + t) * kappa) / denom; }, 0.0, tau,
                           1e-10);
}

}  // namespace

VfValue vf_at(const BoundaryCurve& curve, Vec2 x, const SourceField& f, const NearestPointOracle& oracle, double tol)
{
    VfValue r;
    Projection p;
    if (const auto* field = dynamic_cast<const DistanceField*>(&oracle)) {
        const auto look = field->project(x);
        p = look.projection;
        r.singular = look.singular;
    } else {
        p = oracle.nearest(x);
    }
    const BoundaryPoint y = curve.eval(p.param);
    r.d = p.distance;
    r.kappa = y.curvature;
    if (r.singular) return r;
    r.lambda = cut_value(curve, y, oracle, tol);
    r.tau = r.lambda - r.d;
    if (r.tau <= tol) {
        r.singular = true;
        r.tau = std::max(r.tau, 0.0);
        return r;
    }
    r.v = ray_integral(f, x, y.normal, r.d, r.kappa, r.tau);
    return r;
}

VfValue vf_boundary(const BoundaryCurve& curve, const BoundaryPoint& y, const SourceField& f,
                    const NearestPointOracle& oracle, double tol)
{
    VfValue r;
    r.kappa = y.curvature;
    for (const CornerInfo& c : detect_corners(curve)) {
        if (curve.periodic_distance(c.s, y.s) <= 10.0 * tol) {
            r.corner_limit = true;
            return r;
        }
    }
    r.lambda = r.tau = cut_value(curve, y, oracle, tol);
    r.v = ray_integral(f, y.position, y.normal, 0.0, r.kappa, r.tau);
    return r;
}

VfValue vf_boundary(const CutSample& sample, const SourceField& f)
{
    VfValue r;
    r.kappa = sample.point.curvature;
    r.corner_limit = sample.corner_limit;
    if (sample.corner_limit) return r;
    r.lambda = r.tau = sample.lambda;
    r.v = ray_integral(f, sample.point.position, sample.point.normal, 0.0, r.kappa, r.tau);
    return r;
}

LambdaTable::LambdaTable(const BoundaryCurve& curve, std::span<const CutSample> samples) : length_(curve.length())
{
    std::vector<std::pair<double, double>> pts;
    for (const CutSample& c : samples) pts.emplace_back(c.point.s, c.lambda);
    for (const CornerInfo& c : detect_corners(curve))
        if (c.convex) pts.emplace_back(c.s, 0.0);
    if (pts.empty()) throw ConfigError("lambda table needs samples");
    std::sort(pts.begin(), pts.end());
    for (auto [s, l] : pts) {
        s_.push_back(s);
        lambda_.push_back(l);
    }
}

double LambdaTable::operator()(double s) const
{
    s = std::fmod(s, length_);
    if (s < 0) s += length_;
    const std::size_t n = s_.size();
    auto it = std::upper_bound(s_.begin(), s_.end(), s);
    const std::size_t hi = static_cast<std::size_t>(it - s_.begin()) % n;
    const std::size_t lo = (hi + n - 1) % n;
    double a = s_[lo], b = s_[hi];
    if (b <= a) b += length_;
    double q = s;
    if (q < a) q += length_;
    if (b - a <= 0) return lambda_[lo];
    const double w = (q - a) / (b - a);
    return (1.0 - w) * lambda_[lo] + w * lambda_[hi];
}

MKSolution vf_field(const BoundaryCurve& curve, const DistanceField& field, std::span<const CutSample> samples,
                    const SourceField& f)
{
    const LambdaTable table(curve, samples);
    MKSolution sol;
    sol.grid = field.grid();
    const GridSpec& g = sol.grid;
    const std::size_t n = g.size();
    sol.u.assign(n, 0.0);
    sol.v.assign(n, 0.0);
    sol.tau.assign(n, 0.0);
    sol.residual.assign(n, std::numeric_limits<double>::quiet_NaN());
    sol.inside.assign(n, 0);
    sol.singular.assign(n, 0);
    sol.valid.assign(n, 0);

    parallel_for(g.ny, [&](std::size_t j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            sol.u[c] = field.signed_distance(c);
            if (!field.inside(c)) continue;
            sol.inside[c] = 1;
            if (field.singular(c)) {
                sol.singular[c] = 1;
                continue;
            }
            const BoundaryPoint y = curve.eval(field.nearest_param(c));
            const double d = field.d(c);
            const double tau = std::max(0.0, table(field.nearest_s(c)) - d);
            sol.tau[c] = tau;
            sol.v[c] = ray_integral(f, g.center(i, j), y.normal, d, y.curvature, tau);
        }
    });

    // conservative face-flux divergence of v grad u
    const double h = g.h;
    const auto ok = [&](std::size_t i, std::size_t j) {
        const std::size_t c = g.index(i, j);
        return sol.inside[c] && !sol.singular[c];
    };
    std::vector<double> absres;
    MKSummary& s = sol.summary;
    s.v_min = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j + 1 < g.ny; ++j) {
        for (std::size_t i = 1; i + 1 < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            if (!sol.inside[c]) continue;
            s.v_max = std::max(s.v_max, sol.v[c]);
            s.v_min = std::min(s.v_min, sol.v[c]);
            s.inradius = std::max(s.inradius, sol.u[c]);
            if (sol.singular[c]) continue;
            const auto U = [&](std::size_t a, std::size_t b) { return sol.u[g.index(a, b)]; };
            const double gx = (U(i + 1, j) - U(i - 1, j)) / (2 * h), gy = (U(i, j + 1) - U(i, j - 1)) / (2 * h);
            s.complementarity_max = std::max(s.complementarity_max, (1.0 - std::hypot(gx, gy)) * sol.v[c]);
            bool all = true;
            for (int dj = -1; dj <= 1 && all; ++dj)
                for (int di = -1; di <= 1 && all; ++di) all = ok(i + di, j + dj);
            if (!all) continue;
            const auto V = [&](std::size_t a, std::size_t b) { return sol.v[g.index(a, b)]; };
            const auto flux = [&](std::size_t a0, std::size_t b0, std::size_t a1, std::size_t b1) {
                return 0.5 * (V(a0, b0) + V(a1, b1)) * (U(a1, b1) - U(a0, b0)) / h;
            };
            const double div = (flux(i, j, i + 1, j) - flux(i - 1, j, i, j) + flux(i, j, i, j + 1) -
                                flux(i, j - 1, i, j)) / h;
            const double r = -div - f(g.center(i, j));
            sol.residual[c] = r;
            sol.valid[c] = 1;
            absres.push_back(std::abs(r));
            s.l1_residual += std::abs(r) * h * h;
            for (auto [a, b] : {std::pair{i + 1, j}, std::pair{i, j + 1}})
                if (ok(a, b)) s.max_jump = std::max(s.max_jump, std::abs(sol.v[c] - V(a, b)));
        }
    }
    if (s.v_min == std::numeric_limits<double>::infinity()) s.v_min = 0.0;
    s.valid_cells = absres.size();
    if (!absres.empty()) {
        s.max_abs_residual = *std::max_element(absres.begin(), absres.end());
        auto mid = absres.begin() + static_cast<std::ptrdiff_t>(absres.size() / 2);
        std::nth_element(absres.begin(), mid, absres.end());
        s.median_abs_residual = *mid;
    }
    if (s.inradius > 0) s.continuity_bound = 10.0 * s.v_max / s.inradius * h;
    return sol;
}

void MKSolution::write_csv(std::ostream& os) const
{
    os << "x,y,u,v,tau,residual,singular\n";
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            const std::size_t c = grid.index(i, j);
            if (!inside[c]) continue;
            const Vec2 x = grid.center(i, j);
            os << fmt17(x.x) << ',' << fmt17(x.y) << ',' << fmt17(u[c]) << ',' << fmt17(v[c]) << ','
               << fmt17(tau[c]) << ',' << (valid[c] ? fmt17(residual[c]) : std::string()) << ',' << int(singular[c])
               << '\n';
        }
    }
}

IntegralReport tent_weak_form(const MKSolution& sol, const SourceField& f, double eps)
{
    if (!(eps > 0)) throw ConfigError("eps must be positive");
    const GridSpec& g = sol.grid;
    const double h = g.h;
    double lhs = 0.0, rhs = 0.0;
    std::size_t used = 0;
    for (std::size_t j = 1; j + 1 < g.ny; ++j) {
        for (std::size_t i = 1; i + 1 < g.nx; ++i) {
            const std::size_t c = g.index(i, j);
            if (!sol.inside[c]) continue;
            const double d = sol.u[c];
            rhs += f(g.center(i, j)) * std::min(d / eps, 1.0);
            if (d >= eps) continue;
            const auto U = [&](std::size_t a, std::size_t b) { return sol.u[g.index(a, b)]; };
            const double gx = (U(i + 1, j) - U(i - 1, j)) / (2 * h), gy = (U(i, j + 1) - U(i, j - 1)) / (2 * h);
            // u is the distance itself, so <grad u, grad d> = |grad d|^2
            lhs += sol.v[c] * (gx * gx + gy * gy) / eps;
            ++used;
        }
    }
    IntegralReport r = make_report("tent_weak_form", lhs * h * h, rhs * h * h, used);
    r.extra["eps"] = eps;
    r.extra["grid_h"] = h;
    return r;
}

MKVerdict mk_verdict(const BoundaryCurve& curve, double gamma, std::span<const CutSample> samples,
                     const NearestPointOracle& oracle, const SymmetryOptions& options)
{
    if (!(gamma > 0)) throw ConfigError("gamma must be positive");
    MKVerdict out;
    out.gamma = gamma;
    const SourceField f = SourceField::constant(gamma);
    std::vector<CutSample> traced(samples.begin(), samples.end());
    double sum = 0.0;
    std::size_t used = 0;
    out.trace_min = std::numeric_limits<double>::infinity();
    out.trace_max = -out.trace_min;
    for (CutSample& c : traced) {
        if (c.corner_limit) continue;
        const double trace = vf_boundary(c, f).v;
        c.phi = trace / gamma;
        out.trace_min = std::min(out.trace_min, trace);
        out.trace_max = std::max(out.trace_max, trace);
        sum += trace;
        ++used;
    }
    out.trace_mean = used ? sum / static_cast<double>(used) : 0.0;
    out.report = criterion_report(curve, traced, oracle, options);
    return out;
}

}  // namespace cutloc
