#include "cutloc/cutlocus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <boost/math/tools/minima.hpp>

#include "cutloc/errors.hpp"
#include "cutloc/format.hpp"
#include "cutloc/parallel.hpp"
#include "cutloc/quadrature.hpp"

namespace cutloc {

double cut_acceptance(const NearestPointOracle& oracle, double tol)
{
    return std::max(5.0 * tol, 3.0 * oracle.resolution());
}

bool cut_predicate(const BoundaryCurve& curve, const BoundaryPoint& y, const NearestPointOracle& oracle, double t,
                   double tol)
{
    Projection p;
    try {
        p = oracle.nearest(y.position - t * y.normal);
    } catch (const DomainError&) {
        return false;  // the ray left the oracle's box, hence the domain
    }
    if (curve.periodic_distance(p.s, y.s) <= cut_acceptance(oracle, tol)) return true;
    // ties: y is still a nearest point when nothing is strictly closer than t
    return p.distance >= t - 1e-12 * curve.diameter();
}

double cut_value(const BoundaryCurve& curve, const BoundaryPoint& y, const NearestPointOracle& oracle, double tol)
{
    if (!(tol > 0)) throw ConfigError("cut tolerance must be positive");
    double hi = curve.diameter();
    if (y.curvature > 0) hi = std::min(hi, 1.0 / y.curvature);
    if (!cut_predicate(curve, y, oracle, tol, tol)) throw DegenerateRayError("cut predicate fails at t = tol");
    if (cut_predicate(curve, y, oracle, hi, tol)) return hi;
    double lo = tol;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (cut_predicate(curve, y, oracle, mid, tol) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double phi_2d(double lambda, double kappa) { return lambda - 0.5 * lambda * lambda * kappa; }

double phi_general(double lambda, std::span<const double> kappas, double abs_tol)
{
    const auto integrand = [&](double t) {
        double p = 1.0;
        for (double k : kappas) p *= 1.0 - t * k;
        return p;
    };
    return quad::integrate(integrand, 0.0, lambda, abs_tol);
}

std::vector<CutSample> compute_cut_samples(const BoundaryCurve& curve, std::span<const BoundaryPoint> points,
                                           const NearestPointOracle& oracle, double tol)
{
    const auto corners = detect_corners(curve);
    std::vector<CutSample> out(points.size());
    parallel_for(points.size(), [&](std::size_t k) {
        CutSample& c = out[k];
        c.point = points[k];
        for (const CornerInfo& q : corners) {
            if (curve.periodic_distance(q.s, c.point.s) <= 10.0 * tol) {
                c.corner_limit = true;
                return;
            }
        }
        c.lambda = cut_value(curve, c.point, oracle, tol);
        c.phi = phi_2d(c.lambda, c.point.curvature);
        c.lambda_kappa = c.lambda * c.point.curvature;
    });
    return out;
}

double verify_kd(std::span<const CutSample> samples)
{
    double m = -std::numeric_limits<double>::infinity();
    for (const CutSample& c : samples)
        if (!c.corner_limit) m = std::max(m, c.lambda_kappa);
    return m;
}

BoundaryPoint refine_curvature_max(const BoundaryCurve& curve, std::span<const BoundaryPoint> points)
{
    if (points.empty()) throw ConfigError("no boundary samples");
    std::size_t best = 0;
    for (std::size_t k = 1; k < points.size(); ++k)
        if (points[k].curvature > points[best].curvature) best = k;
    const double step = curve.length() / static_cast<double>(points.size());
    const double s = points[best].s;
    const auto neg_kappa = [&](double u) { return -curve.at_arclength(u).curvature; };
    const auto [u, v] = boost::math::tools::brent_find_minima(neg_kappa, s - step, s + step, 50);
    if (-v <= points[best].curvature) return points[best];
    return curve.at_arclength(u);
}

FocalCheck focal_check(const BoundaryCurve& curve, std::span<const BoundaryPoint> points,
                       const NearestPointOracle& oracle, double tol)
{
    if (!detect_corners(curve).empty()) throw InapplicableError("focal check needs a curve without corners");
    FocalCheck r;
    r.y0 = refine_curvature_max(curve, points);
    if (!(r.y0.curvature > 0)) throw InapplicableError("maximal curvature is not positive");
    r.lambda = cut_value(curve, r.y0, oracle, tol);
    r.residual = std::abs(r.y0.curvature * r.lambda - 1.0);
    return r;
}

double lambda_lipschitz(const BoundaryCurve& curve, std::span<const CutSample> samples)
{
    double lip = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const CutSample& a = samples[k];
        const CutSample& b = samples[(k + 1) % samples.size()];
        if (a.corner_limit || b.corner_limit) continue;
        const double ds = curve.periodic_distance(a.point.s, b.point.s);
        if (ds > 0) lip = std::max(lip, std::abs(a.lambda - b.lambda) / ds);
    }
    return lip;
}

NormalRayChart build_ray_chart(const BoundaryCurve& curve, double s0, double s1, std::size_t n,
                               const NearestPointOracle& oracle, double tol)
{
    if (!(s1 > s0) || n == 0) throw ConfigError("ray chart needs a nonempty window");
    for (const CornerInfo& q : detect_corners(curve)) {
        // corner arclength lifted into [s0, s0 + L)
        double c = std::fmod(q.s - s0, curve.length());
        if (c < 0) c += curve.length();
        const double eps = 1e-12 * curve.length();
        if (c > eps && c < s1 - s0 - eps) throw DomainError("ray chart window contains a corner");
    }
    NormalRayChart ch;
    ch.s0 = s0;
    ch.s1 = s1;
    ch.sigma.resize(n);
    ch.Y.resize(n);
    ch.N.resize(n);
    ch.K.resize(n);
    ch.Lambda.resize(n);
    const double ds = (s1 - s0) / static_cast<double>(n);
    parallel_for(n, [&](std::size_t k) {
        const double s = s0 + (static_cast<double>(k) + 0.5) * ds;
        const BoundaryPoint y = curve.at_arclength(s);
        ch.sigma[k] = s;
        ch.Y[k] = y.position;
        ch.N[k] = y.normal;
        ch.K[k] = y.curvature;
        ch.Lambda[k] = cut_value(curve, y, oracle, tol);
    });
    return ch;
}

void write_samples_csv(std::ostream& os, std::span<const CutSample> samples)
{
    os << "s,x,y,nx,ny,kappa,lambda,phi,kappa_lambda\n";
    for (const CutSample& c : samples) {
        const BoundaryPoint& p = c.point;
        os << fmt17(p.s) << ',' << fmt17(p.position.x) << ',' << fmt17(p.position.y) << ',' << fmt17(p.normal.x)
           << ',' << fmt17(p.normal.y) << ',' << fmt17(p.curvature) << ',' << fmt17(c.lambda) << ','
           << fmt17(c.phi) << ',' << fmt17(c.lambda_kappa) << '\n';
    }
}

}  // namespace cutloc
